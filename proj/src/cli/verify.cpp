#include "besselq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace besselq::verify {

namespace {

double rel_diff(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

void track(RouteAgreement& agg, double discrepancy, double omega)
{
    if (!(discrepancy <= agg.max_discrepancy)) {
        agg.max_discrepancy = discrepancy;
        agg.worst_omega = omega;
    }
}

// Sum_{n>=0} 1/(y+n)^2 for large y.
double trigamma_large(double y)
{
    const double r = 1.0 / y;
    const double r2 = r * r;
    return r + 0.5 * r2 + r * r2 * (1.0 / 6.0 - r2 * (1.0 / 30.0 - r2 * (1.0 / 42.0 - r2 / 30.0)));
}

}  // namespace

RouteAgreement three_route_agreement(const model::ModelOrder& model, std::span<const double> omegas,
                                     const qfactor::QOptions& options)
{
    RouteAgreement agg;
    for (double omega : omegas) {
        const double fg = qfactor::q_inverse_fg(model, omega, options).q_inverse;
        const double kv = qfactor::q_inverse_kelvin(model, omega, options).q_inverse;
        const double dr = qfactor::q_inverse_direct(model, omega, options).q_inverse;
        track(agg, std::max({rel_diff(fg, dr), rel_diff(kv, dr), rel_diff(fg, kv)}), omega);
    }
    return agg;
}

RouteAgreement kelvin_direct_agreement(const model::ModelOrder& model, std::span<const double> omegas,
                                       const qfactor::QOptions& options)
{
    RouteAgreement agg;
    for (double omega : omegas) {
        const double kv = qfactor::q_inverse_kelvin(model, omega, options).q_inverse;
        const double dr = qfactor::q_inverse_direct(model, omega, options).q_inverse;
        track(agg, rel_diff(kv, dr), omega);
    }
    return agg;
}

double rayleigh_sneddon_sum(double nu, std::size_t count)
{
    const specfun::BesselZeroTable table(nu, count);
    double sum = 0.0;
    // Smallest terms first.
    for (std::size_t k = count; k >= 1; --k) {
        const double j = table.zero(k);
        sum += 1.0 / (j * j);
    }
    const double shift = 0.5 * nu - 0.25;
    const double tail = trigamma_large(static_cast<double>(count) + 1.0 + shift) / (std::numbers::pi * std::numbers::pi);
    return sum + tail;
}

LaplaceCheck laplace_consistency(const model::ModelOrder& model, double s)
{
    const double nu = model.nu();
    const double c = 4.0 * (nu + 1.0) * (nu + 2.0);
    const specfun::BesselZeroTable zeros(nu + 2.0, 20000);
    const double j1 = zeros.zero(1);
    // e^{-(s + j1^2) t} is below e^-40 past t_max.
    const double u_max = std::sqrt(40.0 / (s + j1 * j1));

    // t = u^2 keeps the integrand smooth at the t^-1/2 singularity of Psi.
    auto integrand = [&](double u) {
        if (u == 0.0) {
            return 0.0;
        }
        const double t = u * u;
        const double psi = model::creep_rate_time(model, t, zeros).value;
        return 2.0 * u * std::exp(-s * t) * (psi - c);
    };
    const double integral =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, u_max, 15, 1e-13);

    LaplaceCheck out;
    out.quadrature = c / s + integral;
    out.closed_form = model::creep_rate_laplace(model, specfun::Complex(s, 0.0)).real();
    out.rel_error = rel_diff(out.quadrature, out.closed_form);
    return out;
}

}  // namespace besselq::verify
