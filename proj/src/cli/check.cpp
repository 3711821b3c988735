#include <cmath>
#include <ostream>

#include "besselq/cli.hpp"
#include "besselq/errors.hpp"
#include "besselq/verify.hpp"

namespace besselq::cli {

namespace {

std::string label(const std::string& suite, double nu)
{
    return suite + " (nu = " + format_number(nu) + ")";
}

// Runs one measurement; any library error fails the item with its message.
template <class F>
CheckItem measure(std::string name, double bound, F&& f, bool strict = false)
{
    CheckItem item;
    item.name = std::move(name);
    item.bound = bound;
    try {
        item.measured = f(item.detail);
        item.passed = strict ? item.measured < bound : item.measured <= bound;
    } catch (const std::exception& e) {
        item.measured = INFINITY;
        item.passed = false;
        item.detail = e.what();
    }
    return item;
}

}  // namespace

bool CheckReport::passed() const
{
    return first_failure() == nullptr;
}

const CheckItem* CheckReport::first_failure() const
{
    for (const CheckItem& item : items) {
        if (!item.passed) {
            return &item;
        }
    }
    return nullptr;
}

CheckReport run_checks(std::span<const double> nus, const qfactor::QOptions& options)
{
    const std::vector<double> below = FrequencyGrid{Scale::log, 1e-3, kReferenceCrossover, 41}.points();
    const std::vector<double> above = FrequencyGrid{Scale::log, kReferenceCrossover, 1e6, 41}.points();
    const std::vector<double> sweep = FrequencyGrid{Scale::log, 1e-4, 1e5, 181}.points();

    CheckReport report;
    for (double nu : nus) {
        const model::ModelOrder model(nu);
        report.items.push_back(measure(label("route agreement below crossover", nu), kRouteAgreementBelow,
                                       [&](std::string& detail) {
                                           const auto agg = verify::three_route_agreement(model, below, options);
                                           detail = "worst at omega = " + format_number(agg.worst_omega);
                                           return agg.max_discrepancy;
                                       }));
        report.items.push_back(measure(label("route agreement above crossover", nu), kRouteAgreementAbove,
                                       [&](std::string& detail) {
                                           const auto agg = verify::kelvin_direct_agreement(model, above, options);
                                           detail = "worst at omega = " + format_number(agg.worst_omega);
                                           return agg.max_discrepancy;
                                       }));
        // Measured as the largest successive ratio minus one; must stay negative.
        report.items.push_back(measure(label("monotone decrease", nu), 0.0, [&](std::string& detail) {
            double worst = -INFINITY;
            double previous = INFINITY;
            for (double omega : sweep) {
                const double q = qfactor::q_inverse(model, omega, options).q_inverse;
                if (q / previous - 1.0 > worst) {
                    worst = q / previous - 1.0;
                    detail = "worst step ending at omega = " + format_number(omega);
                }
                previous = q;
            }
            return worst;
        }, true));
        report.items.push_back(measure(label("Rayleigh-Sneddon sum", nu), kRayleighSneddonTol,
                                       [&](std::string& detail) {
                                           const double sum = verify::rayleigh_sneddon_sum(nu);
                                           const double exact = 0.25 / (nu + 1.0);
                                           detail = "sum = " + format_number(sum);
                                           return std::abs(sum - exact) / exact;
                                       }));
        for (double s : {1.0, 2.0, 5.0}) {
            report.items.push_back(measure(label("Laplace consistency s = " + format_number(s), nu),
                                           kLaplaceConsistencyTol, [&](std::string& detail) {
                                               const auto lc = verify::laplace_consistency(model, s);
                                               detail = "quadrature = " + format_number(lc.quadrature);
                                               return lc.rel_error;
                                           }));
        }
    }
    return report;
}

void print_report(std::ostream& out, const CheckReport& report)
{
    for (const CheckItem& item : report.items) {
        out << (item.passed ? "ok   " : "FAIL ") << item.name << ": " << format_number(item.measured)
            << " (bound " << format_number(item.bound) << ")";
        if (!item.detail.empty()) {
            out << "  " << item.detail;
        }
        out << '\n';
    }
    if (const CheckItem* first = report.first_failure()) {
        out << "check failed: " << first->name << '\n';
    } else {
        out << "all checks passed\n";
    }
}

}  // namespace besselq::cli
