// besselq: Q^-1 sweeps, figure data and self-checks for the Bessel models.

#include <exception>
#include <iostream>
#include <optional>
#include <vector>

#include <CLI11.hpp>

#include "besselq/cli.hpp"
#include "besselq/errors.hpp"

namespace {

using namespace besselq;

struct GridArgs {
    std::vector<double> linear;
    std::vector<double> log;
    int count = 181;
};

void add_grid_options(CLI::App* cmd, GridArgs& args)
{
    auto* lin = cmd->add_option("--linear", args.linear, "Linear frequency range: MIN MAX")->expected(2);
    auto* lg = cmd->add_option("--log", args.log, "Logarithmic frequency range: MIN MAX")->expected(2);
    lin->excludes(lg);
    cmd->add_option("--count", args.count, "Number of frequencies")->check(CLI::Range(2, 10000000));
}

cli::FrequencyGrid make_grid(const GridArgs& args)
{
    cli::FrequencyGrid grid;
    grid.count = args.count;
    if (!args.linear.empty()) {
        grid.scale = cli::Scale::linear;
        grid.min = args.linear[0];
        grid.max = args.linear[1];
    } else if (!args.log.empty()) {
        grid.min = args.log[0];
        grid.max = args.log[1];
    }
    grid.validate();
    return grid;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Inverse quality factor of the Bessel viscoelastic models"};
    app.require_subcommand(1);

    qfactor::QOptions options;
    std::vector<double> nus = {0.0};
    std::filesystem::path out;
    GridArgs grid_args;
    std::optional<double> rel_tol;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--crossover", options.crossover, "Frequency above which the f/g series are not used")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--rel-tol", rel_tol, "Series stopping tolerance");
    };

    auto* sweep = app.add_subcommand("sweep", "Write Q^-1 over a frequency grid as CSV");
    sweep->add_option("--nu", nus, "Model orders (> -1)")->delimiter(',');
    add_grid_options(sweep, grid_args);
    sweep->add_option("--out", out, "Output CSV file")->required();
    add_common(sweep);

    cli::FigureConfig figures_config;
    auto* figures = app.add_subcommand("figures", "Write figure data and gnuplot scripts");
    figures->add_option("--nu", figures_config.nus, "Model orders for the curve families")->delimiter(',');
    figures->add_option("--out", out, "Output directory")->required();
    add_common(figures);

    std::vector<double> check_nus = {-0.5, 0.0, 1.0, 3.5, 10.0};
    auto* check = app.add_subcommand("check", "Run the internal consistency suites");
    check->add_option("--nu", check_nus, "Model orders")->delimiter(',');
    add_common(check);

    CLI11_PARSE(app, argc, argv);

    try {
        if (rel_tol) {
            options.policy.rel_tol = *rel_tol;
        }
        options.validate();

        if (sweep->parsed()) {
            cli::write_sweep_file(out, nus, make_grid(grid_args), options);
            return 0;
        }
        if (figures->parsed()) {
            figures_config.options = options;
            for (const auto& path : cli::write_figures(out, figures_config)) {
                std::cout << path.string() << '\n';
            }
            return 0;
        }
        const cli::CheckReport report = cli::run_checks(check_nus, options);
        cli::print_report(std::cout, report);
        return report.passed() ? 0 : 1;
    } catch (const besselq::Error& e) {
        std::cerr << "besselq: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "besselq: " << e.what() << '\n';
        return 2;
    }
}
