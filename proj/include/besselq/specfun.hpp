#pragma once

// Special functions behind the Bessel-media material functions: Gamma,
// modified Bessel I of real order, the entire "uniform" series I^T, the
// contiguous ratio I_a / I_{a+2}, the f/g split of I^T on the ray s = i*omega,
// Kelvin functions ber/bei of real order, and zeros of J.
//
// Every routine is a pure function of its arguments. Orders are real and
// must satisfy order > -1 unless stated otherwise.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "besselq/errors.hpp"

namespace besselq::specfun {

using Complex = std::complex<double>;

// Truncation and reliability controls shared by every power series.
//
// A series stops once |next term| <= rel_tol * |partial sum| holds for two
// consecutive terms. A result whose largest term exceeds the result magnitude
// by more than cancellation_guard is flagged as unreliable.
struct SeriesPolicy {
    double rel_tol = 1e-15;
    int max_terms = 400;
    double cancellation_guard = 1e4;

    // Throws DomainError unless 0 < rel_tol < 1, max_terms >= 8 and
    // cancellation_guard >= 1.
    void validate() const;
};

template <class T>
struct SeriesResult {
    T value{};
    int terms = 0;
    // largest |term| / |value|
    double cancellation_ratio = 1.0;
    bool flagged = false;
    double est_rel_error = 0.0;
};

struct KelvinPair {
    double ber = 0.0;
    double bei = 0.0;
    double order = 0.0;
    double argument = 0.0;
    double est_rel_error = 0.0;
};

// f_a(omega) + i g_a(omega) == I^T_a(sqrt(i omega)).
struct FGPair {
    double f = 0.0;
    double g = 0.0;
    double order = 0.0;
    double omega = 0.0;
    double est_rel_error = 0.0;
    // Set when the alternating series lost too many digits to cancellation.
    bool flagged = false;
};

struct RatioResult {
    Complex value;
    int iterations = 0;
    // |Delta - 1| of the last continued-fraction step.
    double residual = 0.0;
};

/// Gamma function of a real argument. Lanczos approximation with reflection
/// below 1/2. Throws DomainError at the poles 0, -1, -2, ... and OverflowError
/// above x ~ 171.6.
double gamma_real(double x);

/// I_a(x) for real x >= 0 by its power series. The result overflows near
/// x ~ 713; arguments above ~ 500 also exhaust the default 400-term cap.
double modified_bessel_i(double order, double x, const SeriesPolicy& policy = {});

/// Sum_m (s/4)^m / (m! Gamma(m+a+1)), i.e. I^T_a(sqrt(s)) = (z/2)^(-a) I_a(z)
/// with z^2 = s. Taking s directly keeps the function single valued: no square
/// root is ever extracted.
SeriesResult<Complex> tricomi_it(double order, Complex s, const SeriesPolicy& policy = {});

/// I_{a+1}(z) / I_a(z) by the Gauss continued fraction (modified Lentz).
RatioResult bessel_ratio_next(double order, Complex z);

/// I_a(z) / I_{a+2}(z) as the product of the two contiguous continued
/// fractions at orders a and a+1. Both share the same z, so the result
/// carries no branch ambiguity.
RatioResult bessel_ratio_contiguous(double order, Complex z);

/// f_a(omega), g_a(omega) by their alternating series.
FGPair fg_series(double order, double omega, const SeriesPolicy& policy = {});

/// ber_a(x), bei_a(x). Power series for x <= kelvin_series_limit, the
/// two-exponential Hankel expansion of e^{i a pi/2} I_a(x e^{i pi/4}) above
/// it (falling back to the series if that estimate is better). Throws
/// OverflowError once the pair is no longer representable (x ~ 1000) and for
/// x = 0 with negative order.
KelvinPair kelvin(double order, double x, const SeriesPolicy& policy = {});

inline constexpr double kelvin_series_limit = 18.0;

/// f_a, g_a recovered from ber/bei at sqrt(omega) through the 3*pi*a/4
/// rotation and the (2/sqrt(omega))^a prefactor.
FGPair fg_from_kelvin(double order, double omega, const SeriesPolicy& policy = {});

/// J_a(x) for real order a > -1 and x >= 0.
double bessel_j(double order, double x);

/// k-th positive zero of J_a, k >= 1. The returned root is bracketed by a
/// verified sign change of J_a no wider than 1e-10.
double bessel_j_zero(double order, int k);

/// First `count` zeros of J_a, computed once.
class BesselZeroTable {
public:
    BesselZeroTable(double order, std::size_t count);

    double order() const { return order_; }
    std::size_t size() const { return zeros_.size(); }
    // k is 1-based.
    double zero(std::size_t k) const { return zeros_.at(k - 1); }
    std::span<const double> zeros() const { return zeros_; }

private:
    double order_;
    std::vector<double> zeros_;
};

}  // namespace besselq::specfun
