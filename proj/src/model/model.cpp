#include "besselq/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace besselq::model {

namespace {

void require_s(Complex s, const char* who)
{
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
        throw DomainError(std::string(who) + ": non-finite s");
    }
    if (s == Complex(0.0)) {
        throw DomainError(std::string(who) + ": s must be nonzero");
    }
}

void require_finite(Complex v, const char* who)
{
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw OverflowError(std::string(who) + ": result not finite");
    }
}

// Bound on Sum_{k>K} exp(-j_k^2 t) given j_{K+1}. For order > 1/2 the zero
// spacing exceeds pi, so j_{K+1+m} >= j_{K+1} + m pi and
// Sum_m exp(-(j + m pi)^2 t) <= exp(-j^2 t) / (1 - exp(-2 pi j t)).
double dirichlet_tail(double next_zero, double t)
{
    return std::exp(-next_zero * next_zero * t) / -std::expm1(-2.0 * std::numbers::pi * next_zero * t);
}

template <class ZeroSource>
CreepRateSample creep_rate_sum(const ModelOrder& model, double t, const specfun::SeriesPolicy& policy,
                               std::size_t max_zeros, ZeroSource&& zero)
{
    policy.validate();
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("creep_rate_time: t must be finite and > 0");
    }
    const double nu = model.nu();
    const double constant = 4.0 * (nu + 1.0) * (nu + 2.0);
    const double weight = 4.0 * (nu + 1.0);

    double sum = 0.0;
    std::size_t k = 0;
    for (;;) {
        if (k >= max_zeros) {
            throw TruncationError("creep_rate_time: more than " + std::to_string(max_zeros) +
                                  " zeros needed at t = " + std::to_string(t));
        }
        const double next_zero = zero(k + 1);
        const double tail = weight * dirichlet_tail(next_zero, t);
        if (k >= 1 && tail <= policy.rel_tol * (constant + weight * sum)) {
            return {constant + weight * sum, {k, tail}};
        }
        sum += std::exp(-next_zero * next_zero * t);
        ++k;
    }
}

}  // namespace

ModelOrder::ModelOrder(double nu) : nu_(nu)
{
    if (!(nu > -1.0) || !std::isfinite(nu)) {
        throw DomainError("ModelOrder: nu must be finite and > -1");
    }
}

Complex creep_rate_laplace(const ModelOrder& model, Complex s)
{
    require_s(s, "creep_rate_laplace");
    const Complex z = std::sqrt(s);
    const double nu = model.nu();
    // I_{nu+1}/I_{nu+2} = 1 / (I_{nu+2}/I_{nu+1}).
    const specfun::RatioResult upper = specfun::bessel_ratio_next(nu + 1.0, z);
    const Complex value = 2.0 * (nu + 1.0) / (z * upper.value);
    require_finite(value, "creep_rate_laplace");
    return value;
}

Complex creep_compliance_laplace(const ModelOrder& model, Complex s)
{
    require_s(s, "creep_compliance_laplace");
    const Complex value = specfun::bessel_ratio_contiguous(model.nu(), std::sqrt(s)).value;
    require_finite(value, "creep_compliance_laplace");
    return value;
}

CreepRateSample creep_rate_time(const ModelOrder& model, double t, const specfun::SeriesPolicy& policy,
                                std::size_t max_zeros)
{
    const double order = model.nu() + 2.0;
    return creep_rate_sum(model, t, policy, max_zeros,
                          [order](std::size_t k) { return specfun::bessel_j_zero(order, static_cast<int>(k)); });
}

CreepRateSample creep_rate_time(const ModelOrder& model, double t, const specfun::BesselZeroTable& zeros,
                                const specfun::SeriesPolicy& policy)
{
    if (zeros.order() != model.nu() + 2.0) {
        throw DomainError("creep_rate_time: zero table must hold zeros of J_{nu+2}");
    }
    // The last tabulated zero only serves the tail bound.
    const std::size_t usable = zeros.size() == 0 ? 0 : zeros.size() - 1;
    return creep_rate_sum(model, t, policy, usable, [&zeros](std::size_t k) { return zeros.zero(k); });
}

Complex creep_compliance_asymptotic(const ModelOrder& model, Complex s, Regime regime)
{
    require_s(s, "creep_compliance_asymptotic");
    const double nu = model.nu();
    if (regime == Regime::high) {
        return 1.0 + 2.0 * (nu + 1.0) / std::sqrt(s);
    }
    return 2.0 * (nu + 2.0) / (nu + 3.0) + 4.0 * (nu + 1.0) * (nu + 2.0) / s;
}

double frac_maxwell_q_inverse(double beta, double omega_tau)
{
    if (!(beta > 0.0 && beta <= 1.0)) {
        throw DomainError("frac_maxwell_q_inverse: beta must lie in (0, 1]");
    }
    if (!(omega_tau > 0.0) || !std::isfinite(omega_tau)) {
        throw DomainError("frac_maxwell_q_inverse: omega_tau must be finite and > 0");
    }
    if (beta == 1.0) {
        return 1.0 / omega_tau;
    }
    const double half_angle = 0.5 * std::numbers::pi * beta;
    return std::sin(half_angle) / (std::pow(omega_tau, beta) + std::cos(half_angle));
}

}  // namespace besselq::model
