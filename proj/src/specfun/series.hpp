#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "besselq/specfun.hpp"

namespace besselq::specfun::detail {

inline constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

// Stop once |term| <= rel_tol * |sum| for two consecutive terms.
class StoppingRule {
public:
    explicit StoppingRule(double rel_tol) : rel_tol_(rel_tol) {}

    bool satisfied(double term_abs, double sum_abs)
    {
        run_ = term_abs <= rel_tol_ * sum_abs ? run_ + 1 : 0;
        return run_ >= 2;
    }

private:
    double rel_tol_;
    int run_ = 0;
};

inline void require_order(double order, const char* who)
{
    if (!(order > -1.0) || !std::isfinite(order)) {
        throw DomainError(std::string(who) + ": order must be finite and > -1");
    }
}

[[noreturn]] inline void throw_truncation(const char* who, int max_terms)
{
    throw TruncationError(std::string(who) + ": no convergence within " +
                          std::to_string(max_terms) + " terms");
}

// sin(pi x), cos(pi x) with exact argument reduction.
double sin_pi(double x);
double cos_pi(double x);

}  // namespace besselq::specfun::detail
