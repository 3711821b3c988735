#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "besselq/specfun.hpp"
#include "series.hpp"

namespace besselq::specfun {

namespace {

// Below this the Hankel estimate is trusted without consulting the series.
constexpr double kHankelTrust = 1e-14;

// Sum_m t_m with t_m = q^m / (m! Gamma(m+a+1)), each term sent to one of
// four accumulators by m mod 4 (the powers of i). Returns the two
// combinations (even - even', odd - odd') as re/im.
struct QuadrantSum {
    double re = 0.0;
    double im = 0.0;
    double largest = 0.0;
    double abs_total = 0.0;
    double last = 0.0;
    int terms = 0;
};

QuadrantSum sum_quadrants(double order, double q, const SeriesPolicy& policy, const char* who)
{
    // Accumulating the four residues separately and subtracting once keeps
    // the rounding of each partial sum one-signed.
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    double term = 1.0 / gamma_real(order + 1.0);
    acc[0] = term;
    QuadrantSum out;
    out.largest = std::abs(term);
    out.abs_total = out.largest;
    detail::StoppingRule rule(policy.rel_tol);
    int m = 0;
    for (;; ++m) {
        if (m + 1 >= policy.max_terms) {
            detail::throw_truncation(who, policy.max_terms);
        }
        term *= q / ((m + 1.0) * (m + 1.0 + order));
        acc[(m + 1) % 4] += term;
        const double t = std::abs(term);
        out.largest = std::max(out.largest, t);
        out.abs_total += t;
        if (!std::isfinite(out.abs_total)) {
            throw OverflowError(std::string(who) + ": terms overflow");
        }
        const double re = acc[0] - acc[2];
        const double im = acc[1] - acc[3];
        if (rule.satisfied(t, std::hypot(re, im))) {
            out.last = t;
            break;
        }
    }
    out.re = acc[0] - acc[2];
    out.im = acc[1] - acc[3];
    out.terms = m + 2;
    return out;
}

KelvinPair kelvin_series(double order, double x, const SeriesPolicy& policy)
{
    // (x/2)^a Sum_k cos/sin(3 a pi/4 + k pi/2) t_k: rotate the quadrant sum
    // F = Sum (i x^2/4)^k / (k! Gamma(k+a+1)) by 3 a pi/4.
    const QuadrantSum sum = sum_quadrants(order, 0.25 * x * x, policy, "kelvin");
    const double c = detail::cos_pi(0.75 * order);
    const double s = detail::sin_pi(0.75 * order);
    const double prefactor = std::pow(0.5 * x, order);
    KelvinPair out;
    out.order = order;
    out.argument = x;
    out.ber = prefactor * (c * sum.re - s * sum.im);
    out.bei = prefactor * (s * sum.re + c * sum.im);
    const double magnitude = std::hypot(sum.re, sum.im);
    out.est_rel_error = magnitude > 0.0
                            ? (detail::kEpsilon * sum.abs_total + sum.last) / magnitude
                            : INFINITY;
    return out;
}

// ber + i bei = e^{i a pi/2} I_a(z), z = x e^{i pi/4}, with
// I_a(z) ~ e^z/sqrt(2 pi z) [Sum (-1)^k a_k/z^k + i e^{i a pi} e^{-2z} Sum a_k/z^k].
// Returns the pair scaled by e^{-x/sqrt 2}.
KelvinPair kelvin_hankel_scaled(double order, double x)
{
    const Complex z = std::polar(x, 0.25 * std::numbers::pi);
    const double mu = 4.0 * order * order;
    Complex alternating = 1.0;
    Complex plain = 1.0;
    Complex term = 1.0;
    double last = 0.0;
    double previous = INFINITY;
    for (int k = 1; k < 500; ++k) {
        const double odd = 2.0 * k - 1.0;
        const Complex next = term * (mu - odd * odd) / (8.0 * k * z);
        const double size = std::abs(next);
        // Asymptotic series: stop at the smallest term.
        if (size >= previous && odd * odd > mu) {
            break;
        }
        term = next;
        previous = size;
        last = size;
        plain += term;
        alternating += (k % 2 == 0) ? term : -term;
        if (size <= 0.5 * detail::kEpsilon * std::abs(alternating)) {
            break;
        }
    }

    const double re_z = z.real();
    const Complex oscillation = std::polar(1.0, z.imag());
    const Complex subdominant = Complex(0.0, 1.0) *
                                Complex(detail::cos_pi(order), detail::sin_pi(order)) *
                                std::polar(std::exp(-2.0 * re_z), -2.0 * z.imag());
    const Complex scaled_i =
        oscillation * (alternating + subdominant * plain) / std::sqrt(2.0 * std::numbers::pi * z);
    const Complex rotated =
        Complex(detail::cos_pi(0.5 * order), detail::sin_pi(0.5 * order)) * scaled_i;

    KelvinPair out;
    out.order = order;
    out.argument = x;
    out.ber = rotated.real();
    out.bei = rotated.imag();
    out.est_rel_error = last / std::abs(alternating) + 8.0 * detail::kEpsilon;
    return out;
}

}  // namespace

FGPair fg_series(double order, double omega, const SeriesPolicy& policy)
{
    policy.validate();
    detail::require_order(order, "fg_series");
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("fg_series: omega must be finite and > 0");
    }
    const QuadrantSum sum = sum_quadrants(order, 0.25 * omega, policy, "fg_series");
    FGPair out;
    out.order = order;
    out.omega = omega;
    out.f = sum.re;
    out.g = sum.im;
    const double magnitude = std::hypot(sum.re, sum.im);
    const double ratio = magnitude > 0.0 ? sum.largest / magnitude : INFINITY;
    out.flagged = !(ratio <= policy.cancellation_guard);
    out.est_rel_error = magnitude > 0.0
                            ? (detail::kEpsilon * sum.abs_total + sum.last) / magnitude
                            : INFINITY;
    return out;
}

KelvinPair kelvin(double order, double x, const SeriesPolicy& policy)
{
    policy.validate();
    detail::require_order(order, "kelvin");
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("kelvin: argument must be finite and >= 0");
    }
    if (x == 0.0) {
        if (order < 0.0) {
            throw DomainError("kelvin: ber/bei are unbounded at x = 0 for negative order");
        }
        KelvinPair out;
        out.order = order;
        out.ber = order == 0.0 ? 1.0 : 0.0;
        return out;
    }
    if (x <= kelvin_series_limit) {
        return kelvin_series(order, x, policy);
    }

    KelvinPair scaled = kelvin_hankel_scaled(order, x);
    if (scaled.est_rel_error > kHankelTrust) {
        // Large order relative to x: the direct series may do better.
        try {
            KelvinPair series = kelvin_series(order, x, policy);
            if (series.est_rel_error < scaled.est_rel_error) {
                return series;
            }
        } catch (const Error&) {
            // keep the asymptotic value
        }
    }
    const double growth = x / std::numbers::sqrt2;
    const double log_size = growth + std::log(std::hypot(scaled.ber, scaled.bei));
    if (log_size >= std::log(std::numeric_limits<double>::max())) {
        throw OverflowError("kelvin: ber/bei overflow at x = " + std::to_string(x));
    }
    const double scale = std::exp(growth);
    scaled.ber *= scale;
    scaled.bei *= scale;
    return scaled;
}

FGPair fg_from_kelvin(double order, double omega, const SeriesPolicy& policy)
{
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("fg_from_kelvin: omega must be finite and > 0");
    }
    const double x = std::sqrt(omega);
    const KelvinPair k = kelvin(order, x, policy);
    const double c = detail::cos_pi(0.75 * order);
    const double s = detail::sin_pi(0.75 * order);
    const double prefactor = std::pow(2.0 / x, order);
    FGPair out;
    out.order = order;
    out.omega = omega;
    out.f = prefactor * (c * k.ber + s * k.bei);
    out.g = prefactor * (-s * k.ber + c * k.bei);
    if (!std::isfinite(out.f) || !std::isfinite(out.g)) {
        throw OverflowError("fg_from_kelvin: overflow at omega = " + std::to_string(omega));
    }
    out.est_rel_error = k.est_rel_error + 4.0 * detail::kEpsilon;
    out.flagged = !(out.est_rel_error <= policy.rel_tol * policy.cancellation_guard);
    return out;
}

}  // namespace besselq::specfun
