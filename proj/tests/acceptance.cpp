// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "besselq/cli.hpp"
#include "besselq/model.hpp"
#include "besselq/qfactor.hpp"
#include "besselq/verify.hpp"
#include "golden_cases.hpp"
#include "oracle.hpp"

using namespace besselq;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool passed = false;
    std::string summary;
};

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

double rel(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

std::vector<double> log_grid(double lo, double hi, int n)
{
    return cli::FrequencyGrid{cli::Scale::log, lo, hi, n}.points();
}

const double kRouteNus[] = {-0.5, 0.0, 1.0, 3.5, 10.0};

Outcome route_agreement()
{
    const auto below = log_grid(1e-3, cli::kReferenceCrossover, 40);
    const auto above = log_grid(cli::kReferenceCrossover, 1e6, 40);
    double worst_below = 0.0;
    double worst_above = 0.0;
    for (double nu : kRouteNus) {
        const qfactor::ModelOrder m(nu);
        worst_below = std::max(worst_below, verify::three_route_agreement(m, below).max_discrepancy);
        worst_above = std::max(worst_above, verify::kelvin_direct_agreement(m, above).max_discrepancy);
    }
    return {worst_below <= 1e-9 && worst_above <= 1e-8,
            "max below " + sci(worst_below) + " (<= 1e-9), above " + sci(worst_above) + " (<= 1e-8)"};
}

// Gaps at three frequencies, the first bounded and the sequence decreasing.
Outcome asymptote(qfactor::Regime regime, const std::vector<double>& omegas, double bound)
{
    bool ok = true;
    std::string summary;
    for (double nu : {0.0, 1.0, 5.0}) {
        const qfactor::ModelOrder m(nu);
        std::vector<double> gaps;
        for (double w : omegas) {
            gaps.push_back(rel(qfactor::q_inverse(m, w).q_inverse, qfactor::q_inverse_asymptotic(m, w, regime)));
        }
        const bool bounded = gaps[0] <= bound;
        const bool decreasing = gaps[1] < gaps[0] && gaps[2] < gaps[1];
        ok = ok && bounded && decreasing;
        summary += "nu=" + sci(nu).substr(0, 3) + ": " + sci(gaps[0]) + (bounded ? "" : " (> " + sci(bound) + ")") +
                   " > " + sci(gaps[1]) + " > " + sci(gaps[2]) + (decreasing ? "" : " (not decreasing)") + "; ";
    }
    return {ok, summary};
}

Outcome identities()
{
    double decomposition = 0.0;
    double rotation = 0.0;
    for (double nu : kRouteNus) {
        for (double w : log_grid(1e-3, 1e2, 21)) {
            const specfun::FGPair p = specfun::fg_series(nu, w);
            const specfun::Complex t = specfun::tricomi_it(nu, specfun::Complex(0.0, w)).value;
            decomposition = std::max(decomposition, std::abs(specfun::Complex(p.f, p.g) - t) / std::abs(t));
            const specfun::FGPair k = specfun::fg_from_kelvin(nu, w);
            if (!p.flagged && !k.flagged) {
                rotation = std::max(rotation, std::abs(specfun::Complex(k.f - p.f, k.g - p.g)) / std::hypot(p.f, p.g));
            }
        }
    }
    double compliance = 0.0;
    for (double nu : kRouteNus) {
        const model::ModelOrder m(nu);
        for (double arg : {0.0, std::numbers::pi / 4.0, std::numbers::pi / 2.0}) {
            for (int i = 0; i < 34; ++i) {
                const specfun::Complex s = std::polar(1e-2 * std::pow(1e6, i / 33.0), arg);
                const specfun::Complex sj = model::creep_compliance_laplace(m, s);
                compliance = std::max(compliance, std::abs(1.0 + model::creep_rate_laplace(m, s) - sj) / std::abs(sj));
            }
        }
    }
    return {decomposition <= 1e-11 && rotation <= 1e-9 && compliance <= 1e-11,
            "f+ig vs tricomi " + sci(decomposition) + " (<= 1e-11), kelvin<->fg " + sci(rotation) +
                " (<= 1e-9), sJ vs 1+Psi " + sci(compliance) + " (<= 1e-11)"};
}

Outcome laplace()
{
    double worst = 0.0;
    for (double nu : {0.0, 1.0}) {
        for (double s : {1.0, 2.0, 5.0}) {
            worst = std::max(worst, verify::laplace_consistency(model::ModelOrder(nu), s).rel_error);
        }
    }
    return {worst <= 1e-6, "max rel error " + sci(worst) + " (<= 1e-6)"};
}

Outcome rayleigh_sneddon()
{
    double worst = 0.0;
    for (double nu : {0.0, 1.0, 2.5}) {
        worst = std::max(worst, rel(verify::rayleigh_sneddon_sum(nu), 0.25 / (nu + 1.0)));
    }
    return {worst <= 1e-6, "max rel error " + sci(worst) + " (<= 1e-6)"};
}

Outcome oracle_equivalence()
{
    double worst = 0.0;
    std::string worst_name;
    const auto cases = golden::all_cases();
    for (const golden::Case& c : cases) {
        if (c.rel_error() > worst || worst_name.empty()) {
            worst = std::max(worst, c.rel_error());
            worst_name = c.name;
        }
    }
    // Spot-check the frozen table against a live oracle evaluation.
    double frozen = 0.0;
    frozen = std::max(frozen, rel(golden::gamma_7_5, static_cast<double>(oracle::gamma(oracle::Real(15) / 2))));
    for (const golden::QPoint& p : golden::q_points) {
        if (p.omega <= 100.0 && (p.nu == 0.0 || p.nu == 3.5)) {
            frozen = std::max(frozen, rel(p.q_inverse, static_cast<double>(oracle::q_inverse(p.nu, p.omega))));
        }
    }
    return {worst <= 1e-10 && frozen <= 1e-15,
            std::to_string(cases.size()) + " values, max rel error " + sci(worst) + " at " + worst_name +
                " (<= 1e-10); frozen vs live oracle " + sci(frozen)};
}

struct Row {
    double omega, nu, q, low, high;
};

std::map<double, std::vector<Row>> read_by_nu(const fs::path& path)
{
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    std::map<double, std::vector<Row>> out;
    while (std::getline(in, line)) {
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            f.push_back(field);
        }
        const Row r{std::stod(f[0]), std::stod(f[1]), std::stod(f[2]), std::stod(f[5]), std::stod(f[6])};
        out[r.nu].push_back(r);
    }
    return out;
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome figures()
{
    const fs::path root = fs::temp_directory_path() / ("besselq_acceptance_" + std::to_string(::getpid()));
    cli::write_figures(root / "a");
    cli::write_figures(root / "b");

    int violations = 0;
    for (const char* name : {"fig1.csv", "fig2.csv"}) {
        for (const auto& [nu, rows] : read_by_nu(root / "a" / name)) {
            for (std::size_t i = 1; i < rows.size(); ++i) {
                violations += !(rows[i].q < rows[i - 1].q);
            }
        }
    }
    int wrong_direction = 0;
    for (const auto& [nu, rows] : read_by_nu(root / "a" / "fig3.csv")) {
        for (std::size_t i = 1; i < rows.size(); ++i) {
            wrong_direction += !(rel(rows[i].q, rows[i].high) < rel(rows[i - 1].q, rows[i - 1].high));
        }
    }
    for (const auto& [nu, rows] : read_by_nu(root / "a" / "fig4.csv")) {
        for (std::size_t i = 1; i < rows.size(); ++i) {
            wrong_direction += !(rel(rows[i].q, rows[i].low) > rel(rows[i - 1].q, rows[i - 1].low));
        }
    }
    int differing = 0;
    for (const auto& entry : fs::directory_iterator(root / "a")) {
        differing += slurp(entry.path()) != slurp(root / "b" / entry.path().filename());
    }
    fs::remove_all(root);
    return {violations == 0 && wrong_direction == 0 && differing == 0,
            "monotonicity violations " + std::to_string(violations) + ", asymptote direction violations " +
                std::to_string(wrong_direction) + ", differing files " + std::to_string(differing)};
}

}  // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"1 three-route Q^-1 agreement", route_agreement},
        {"2 low-frequency asymptote",
         [] { return asymptote(qfactor::Regime::low, {1e-3, 1e-4, 1e-5}, 1e-2); }},
        {"3 high-frequency asymptote",
         [] { return asymptote(qfactor::Regime::high, {1e5, 1e6, 1e7}, 2e-2); }},
        {"4 identity suite", identities},
        {"5 Dirichlet/Laplace consistency", laplace},
        {"6 Rayleigh-Sneddon sum", rayleigh_sneddon},
        {"7 oracle equivalence", oracle_equivalence},
        {"8 figure reproduction", figures},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        failed += !o.passed;
        std::printf("[%s] %s: %s\n", o.passed ? "PASS" : "FAIL", c.name, o.summary.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
