#include <fstream>
#include <sstream>

#include "besselq/cli.hpp"
#include "besselq/errors.hpp"

namespace besselq::cli {

namespace {

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text) || !file.flush()) {
        throw Error("cannot write " + path.string());
    }
}

// Column 2 holds nu; select the rows of one curve.
std::string select_nu(double nu, int column)
{
    return "($2 == " + format_number(nu) + " ? $" + std::to_string(column) + " : 1/0)";
}

std::string preamble(const std::string& name, const std::string& size)
{
    std::ostringstream gp;
    gp << "set datafile separator \",\"\n"
       << "set terminal pngcairo size " << size << " enhanced\n"
       << "set output \"" << name << ".png\"\n"
       << "set key top right\n"
       << "set grid\n";
    return gp.str();
}

std::string curve_family(const std::string& name, const std::vector<double>& nus, bool logscale)
{
    std::ostringstream gp;
    gp << preamble(name, "900,650");
    if (logscale) {
        gp << "set logscale xy\n"
           << "set format x \"10^{%L}\"\n"
           << "set format y \"10^{%L}\"\n";
    }
    gp << "set xlabel \"{/Symbol w}\"\n"
       << "set ylabel \"Q^{-1}\"\n"
       << "plot \\\n";
    for (std::size_t i = 0; i < nus.size(); ++i) {
        gp << "  \"" << name << ".csv\" using 1:" << select_nu(nus[i], 3) << " with lines lw 2 title \"{/Symbol n} = "
           << nus[i] << "\"" << (i + 1 < nus.size() ? ", \\\n" : "\n");
    }
    return gp.str();
}

std::string asymptote_panels(const std::string& name, const std::vector<double>& nus, int asymptote_column,
                             const std::string& label)
{
    std::ostringstream gp;
    gp << preamble(name, std::to_string(500 * nus.size()) + ",500")
       << "set logscale xy\n"
       << "set format x \"10^{%L}\"\n"
       << "set xlabel \"{/Symbol w}\"\n"
       << "set ylabel \"Q^{-1}\"\n"
       << "set multiplot layout 1," << nus.size() << "\n";
    for (double nu : nus) {
        gp << "set title \"{/Symbol n} = " << nu << "\"\n"
           << "plot \"" << name << ".csv\" using 1:" << select_nu(nu, 3) << " with lines lw 2 title \"exact\", \\\n"
           << "  \"" << name << ".csv\" using 1:" << select_nu(nu, asymptote_column) << " with lines dt 2 lw 2 title \""
           << label << "\"\n";
    }
    gp << "unset multiplot\n";
    return gp.str();
}

}  // namespace

std::vector<std::filesystem::path> write_figures(const std::filesystem::path& dir, const FigureConfig& config)
{
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    auto emit = [&](const std::string& name, const std::vector<double>& nus, const FrequencyGrid& grid,
                    const std::string& script) {
        const std::filesystem::path csv = dir / (name + ".csv");
        const std::filesystem::path gp = dir / (name + ".gp");
        write_sweep_file(csv, nus, grid, config.options);
        write_text(gp, script);
        written.push_back(csv);
        written.push_back(gp);
    };

    emit("fig1", config.nus, config.linear_grid, curve_family("fig1", config.nus, false));
    emit("fig2", config.nus, config.log_grid, curve_family("fig2", config.nus, true));
    emit("fig3", config.panel_nus, config.high_grid,
         asymptote_panels("fig3", config.panel_nus, 7, "high-frequency asymptote"));
    emit("fig4", config.panel_nus, config.low_grid,
         asymptote_panels("fig4", config.panel_nus, 6, "low-frequency asymptote"));
    return written;
}

}  // namespace besselq::cli
