#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "besselq/specfun.hpp"
#include "series.hpp"

namespace besselq::specfun {

namespace {

// Lanczos series with g = 671/128 and 14 terms; relative error of the
// partial fraction sum is below 1e-15 for x >= 1/2.
constexpr double kLanczosG = 5.24218750000000000;
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr std::array<double, 14> kLanczosCoeffs = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5,
};

// Largest argument with a finite Gamma.
constexpr double kGammaOverflow = 171.624376956302725;

double gamma_lanczos(double x)
{
    double sum = kLanczosC0;
    double y = x;
    for (double c : kLanczosCoeffs) {
        y += 1.0;
        sum += c / y;
    }
    const double t = x + kLanczosG;
    // t^(x+1/2) e^-t split in two halves so neither factor overflows first.
    const double half = std::pow(t, 0.5 * (x + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * sum / x * half * (half * std::exp(-t));
}

}  // namespace

namespace detail {

// Reduces to r in [-1/2, 1/2] exactly, then applies the parity of n.
double sin_pi(double x)
{
    const double n = std::nearbyint(x);
    const double s = std::sin(std::numbers::pi * (x - n));
    return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

double cos_pi(double x)
{
    const double n = std::nearbyint(x);
    const double c = std::cos(std::numbers::pi * (x - n));
    return std::fmod(n, 2.0) == 0.0 ? c : -c;
}

}  // namespace detail

double gamma_real(double x)
{
    if (!std::isfinite(x)) {
        throw DomainError("gamma_real: non-finite argument");
    }
    if (x <= 0.0 && x == std::nearbyint(x)) {
        throw DomainError("gamma_real: pole at " + std::to_string(x));
    }
    if (x > kGammaOverflow) {
        throw OverflowError("gamma_real: overflow for x = " + std::to_string(x));
    }
    if (x < 0.5) {
        return std::numbers::pi / (detail::sin_pi(x) * gamma_lanczos(1.0 - x));
    }
    return gamma_lanczos(x);
}

void SeriesPolicy::validate() const
{
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
        throw DomainError("SeriesPolicy: rel_tol must lie in (0, 1)");
    }
    if (max_terms < 8) {
        throw DomainError("SeriesPolicy: max_terms must be at least 8");
    }
    if (!(cancellation_guard >= 1.0)) {
        throw DomainError("SeriesPolicy: cancellation_guard must be >= 1");
    }
}

}  // namespace besselq::specfun
