#include <fstream>

#include "besselq/cli.hpp"
#include "besselq/errors.hpp"

namespace besselq::cli {

std::vector<SweepRecord> run_sweep(double nu, const FrequencyGrid& grid, const qfactor::QOptions& options)
{
    const qfactor::ModelOrder model(nu);
    std::vector<SweepRecord> out;
    for (double omega : grid.points()) {
        const qfactor::QEvaluation q = qfactor::q_inverse(model, omega, options);
        SweepRecord r;
        r.omega = omega;
        r.nu = nu;
        r.q_inverse = q.q_inverse;
        r.route = q.route;
        r.est_rel_error = q.est_rel_error;
        r.q_asymp_low = qfactor::q_inverse_asymptotic(model, omega, qfactor::Regime::low);
        r.q_asymp_high = qfactor::q_inverse_asymptotic(model, omega, qfactor::Regime::high);
        out.push_back(r);
    }
    return out;
}

void write_sweep_file(const std::filesystem::path& path, std::span<const double> nus, const FrequencyGrid& grid,
                      const qfactor::QOptions& options)
{
    std::vector<SweepRecord> all;
    for (double nu : nus) {
        const std::vector<SweepRecord> part = run_sweep(nu, grid, options);
        all.insert(all.end(), part.begin(), part.end());
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error("cannot open " + path.string() + " for writing");
    }
    write_sweep_csv(file, all);
    if (!file.flush()) {
        throw Error("write to " + path.string() + " failed");
    }
}

}  // namespace besselq::cli
