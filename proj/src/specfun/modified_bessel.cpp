#include <cmath>
#include <complex>
#include <string>

#include "besselq/specfun.hpp"
#include "series.hpp"

namespace besselq::specfun {

namespace {

constexpr double kTiny = 1e-300;
// Lentz stops once |Delta - 1| drops below this.
constexpr double kFractionTol = 2.0 * detail::kEpsilon;

void require_finite(Complex z, const char* who)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError(std::string(who) + ": non-finite complex argument");
    }
}

}  // namespace

double modified_bessel_i(double order, double x, const SeriesPolicy& policy)
{
    policy.validate();
    detail::require_order(order, "modified_bessel_i");
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("modified_bessel_i: argument must be finite and >= 0");
    }
    if (x == 0.0) {
        if (order < 0.0) {
            throw DomainError("modified_bessel_i: I_a(0) is unbounded for negative order");
        }
        return order == 0.0 ? 1.0 : 0.0;
    }

    const double q = 0.25 * x * x;
    double term = 1.0 / gamma_real(order + 1.0);
    double sum = term;
    detail::StoppingRule rule(policy.rel_tol);
    for (int m = 0;; ++m) {
        if (m + 1 >= policy.max_terms) {
            detail::throw_truncation("modified_bessel_i", policy.max_terms);
        }
        term *= q / ((m + 1.0) * (m + 1.0 + order));
        sum += term;
        if (!std::isfinite(sum)) {
            throw OverflowError("modified_bessel_i: overflow at x = " + std::to_string(x));
        }
        if (rule.satisfied(term, sum)) {
            break;
        }
    }
    const double value = std::pow(0.5 * x, order) * sum;
    if (!std::isfinite(value)) {
        throw OverflowError("modified_bessel_i: overflow at x = " + std::to_string(x));
    }
    return value;
}

SeriesResult<Complex> tricomi_it(double order, Complex s, const SeriesPolicy& policy)
{
    policy.validate();
    detail::require_order(order, "tricomi_it");
    require_finite(s, "tricomi_it");

    const Complex q = 0.25 * s;
    Complex term = 1.0 / gamma_real(order + 1.0);
    Complex sum = term;
    double largest = std::abs(term);
    double abs_total = largest;
    detail::StoppingRule rule(policy.rel_tol);
    int m = 0;
    for (;; ++m) {
        if (m + 1 >= policy.max_terms) {
            detail::throw_truncation("tricomi_it", policy.max_terms);
        }
        term *= q / ((m + 1.0) * (m + 1.0 + order));
        sum += term;
        const double t = std::abs(term);
        largest = std::max(largest, t);
        abs_total += t;
        if (!std::isfinite(abs_total)) {
            throw OverflowError("tricomi_it: terms overflow");
        }
        if (rule.satisfied(t, std::abs(sum))) {
            break;
        }
    }

    SeriesResult<Complex> out;
    out.value = sum;
    out.terms = m + 2;
    const double magnitude = std::abs(sum);
    out.cancellation_ratio = magnitude > 0.0 ? largest / magnitude : INFINITY;
    out.flagged = !(out.cancellation_ratio <= policy.cancellation_guard);
    out.est_rel_error = magnitude > 0.0 ? detail::kEpsilon * abs_total / magnitude : INFINITY;
    return out;
}

RatioResult bessel_ratio_next(double order, Complex z)
{
    require_finite(z, "bessel_ratio_next");
    if (z == Complex(0.0)) {
        throw DomainError("bessel_ratio_next: z must be nonzero");
    }
    if (!(order > -1.0)) {
        throw DomainError("bessel_ratio_next: order must be > -1");
    }

    // I_{a+1}/I_a = 1/(b_1 + 1/(b_2 + ...)), b_k = 2(a+k)/z.
    const Complex two_over_z = 2.0 / z;
    const int max_iter = 1000 + static_cast<int>(20.0 * std::abs(z));
    Complex f = kTiny;
    Complex c = f;
    Complex d = 0.0;
    for (int k = 1; k <= max_iter; ++k) {
        const Complex b = (order + k) * two_over_z;
        d = b + d;
        if (d == Complex(0.0)) {
            d = kTiny;
        }
        c = b + 1.0 / c;
        if (c == Complex(0.0)) {
            c = kTiny;
        }
        d = 1.0 / d;
        const Complex delta = c * d;
        f *= delta;
        const double residual = std::abs(delta - 1.0);
        if (residual < kFractionTol) {
            return {f, k, residual};
        }
    }
    throw ConvergenceError("bessel_ratio_next: continued fraction did not converge for |z| = " +
                           std::to_string(std::abs(z)));
}

RatioResult bessel_ratio_contiguous(double order, Complex z)
{
    detail::require_order(order, "bessel_ratio_contiguous");
    const RatioResult lower = bessel_ratio_next(order, z);        // I_{a+1}/I_a
    const RatioResult upper = bessel_ratio_next(order + 1.0, z);  // I_{a+2}/I_{a+1}
    const Complex value = 1.0 / (lower.value * upper.value);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw OverflowError("bessel_ratio_contiguous: ratio overflows");
    }
    return {value, lower.iterations + upper.iterations, std::max(lower.residual, upper.residual)};
}

}  // namespace besselq::specfun
