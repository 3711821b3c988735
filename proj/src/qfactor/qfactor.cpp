#include "besselq/qfactor.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace besselq::qfactor {

namespace {

constexpr double kHazard = 1e-300;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_omega(double omega, const char* who)
{
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError(std::string(who) + ": omega must be finite and > 0");
    }
}

std::string at(double omega)
{
    return " at omega = " + std::to_string(omega);
}

// Relative error of num/den when both carry absolute error delta * scale.
double quotient_error(double delta, double scale, double num, double den)
{
    return delta * scale * (1.0 / std::abs(num) + 1.0 / std::abs(den));
}

// Every route must report a dissipative (positive) value.
QEvaluation checked(QEvaluation q, const char* who)
{
    if (!(q.q_inverse > 0.0) || !std::isfinite(q.q_inverse)) {
        throw InconsistencyError(std::string(who) + ": non-positive Q^-1" + at(q.omega));
    }
    return q;
}

}  // namespace

std::string_view to_string(Route route)
{
    switch (route) {
    case Route::fg_series:
        return "fg_series";
    case Route::kelvin:
        return "kelvin";
    case Route::direct_ratio:
        return "direct_ratio";
    }
    return "unknown";
}

double QOptions::overlap_low() const
{
    return crossover / std::sqrt(10.0);
}

double QOptions::overlap_high() const
{
    return crossover * std::sqrt(10.0);
}

void QOptions::validate() const
{
    if (!(crossover > 0.0) || !std::isfinite(crossover)) {
        throw DomainError("QOptions: crossover must be finite and > 0");
    }
    if (!(overlap_tolerance > 0.0)) {
        throw DomainError("QOptions: overlap_tolerance must be > 0");
    }
    policy.validate();
}

QEvaluation q_inverse_fg(const ModelOrder& model, double omega, const QOptions& options)
{
    options.validate();
    require_omega(omega, "q_inverse_fg");
    if (omega > options.crossover) {
        throw CancellationError("q_inverse_fg: omega above the f/g crossover " +
                                std::to_string(options.crossover) + at(omega));
    }
    const double nu = model.nu();
    const specfun::FGPair low = specfun::fg_series(nu, omega, options.policy);
    const specfun::FGPair high = specfun::fg_series(nu + 2.0, omega, options.policy);
    if (low.flagged || high.flagged) {
        throw CancellationError("q_inverse_fg: f/g series lost its digits to cancellation" + at(omega));
    }

    const double num = low.f * high.f + low.g * high.g;
    const double den = low.g * high.f - low.f * high.g;
    if (std::abs(den) < kHazard) {
        throw DivisionHazardError("q_inverse_fg: vanishing denominator" + at(omega));
    }
    if (!(den > 0.0)) {
        throw InconsistencyError("q_inverse_fg: non-positive storage term" + at(omega));
    }
    const double scale = std::hypot(low.f, low.g) * std::hypot(high.f, high.g);
    return checked({omega, num / den, Route::fg_series,
                    quotient_error(low.est_rel_error + high.est_rel_error, scale, num, den)},
                   "q_inverse_fg");
}

QEvaluation q_inverse_kelvin(const ModelOrder& model, double omega, const QOptions& options)
{
    options.validate();
    require_omega(omega, "q_inverse_kelvin");
    const double nu = model.nu();
    const double x = std::sqrt(omega);
    specfun::KelvinPair low = specfun::kelvin(nu, x, options.policy);
    specfun::KelvinPair high = specfun::kelvin(nu + 2.0, x, options.policy);

    // A positive factor common to a pair cancels between numerator and
    // denominator; normalizing keeps the products in range.
    const double low_size = std::hypot(low.ber, low.bei);
    const double high_size = std::hypot(high.ber, high.bei);
    if (!(low_size > 0.0) || !(high_size > 0.0)) {
        throw DivisionHazardError("q_inverse_kelvin: vanishing Kelvin pair" + at(omega));
    }
    const double ber0 = low.ber / low_size;
    const double bei0 = low.bei / low_size;
    const double ber2 = high.ber / high_size;
    const double bei2 = high.bei / high_size;

    const double num = bei2 * ber0 - bei0 * ber2;
    const double den = bei0 * bei2 + ber0 * ber2;
    if (std::abs(den) < kHazard) {
        throw DivisionHazardError("q_inverse_kelvin: vanishing denominator" + at(omega));
    }
    // Both products are negative for a dissipative medium.
    if (!(den < 0.0)) {
        throw InconsistencyError("q_inverse_kelvin: storage term has the wrong sign" + at(omega));
    }
    return checked({omega, num / den, Route::kelvin,
                    quotient_error(low.est_rel_error + high.est_rel_error + 4.0 * kEps, 1.0, num, den)},
                   "q_inverse_kelvin");
}

QEvaluation q_inverse_direct(const ModelOrder& model, double omega, const QOptions& options)
{
    options.validate();
    require_omega(omega, "q_inverse_direct");
    const specfun::Complex z = std::sqrt(specfun::Complex(0.0, omega));
    const specfun::RatioResult ratio = specfun::bessel_ratio_contiguous(model.nu(), z);
    const double re = ratio.value.real();
    const double im = ratio.value.imag();
    if (std::abs(re) < kHazard) {
        throw DivisionHazardError("q_inverse_direct: vanishing real part" + at(omega));
    }
    if (!(re > 0.0)) {
        throw InconsistencyError("q_inverse_direct: Re{sJ(i omega)} <= 0" + at(omega));
    }
    const double delta = ratio.residual + 4.0 * kEps * std::sqrt(static_cast<double>(ratio.iterations));
    return checked({omega, -im / re, Route::direct_ratio, quotient_error(delta, std::abs(ratio.value), re, im)},
                   "q_inverse_direct");
}

QEvaluation q_inverse(const ModelOrder& model, double omega, const QOptions& options)
{
    options.validate();
    require_omega(omega, "q_inverse");
    // Kelvin and direct lose ~eps/omega at low frequency; the f/g products do not.
    if (omega < options.overlap_low()) {
        return q_inverse_fg(model, omega, options);
    }
    if (omega > options.overlap_high()) {
        return q_inverse_direct(model, omega, options);
    }
    const QEvaluation below = omega <= options.crossover ? q_inverse_fg(model, omega, options)
                                                          : q_inverse_kelvin(model, omega, options);
    const QEvaluation direct = q_inverse_direct(model, omega, options);
    const double discrepancy = std::abs(below.q_inverse - direct.q_inverse) / std::abs(direct.q_inverse);
    if (!(discrepancy <= options.overlap_tolerance)) {
        throw InconsistencyError("q_inverse: routes differ by " + std::to_string(discrepancy) + at(omega));
    }
    QEvaluation out = omega < options.crossover ? below : direct;
    out.est_rel_error = discrepancy;
    return out;
}

double q_inverse_asymptotic(const ModelOrder& model, double omega, Regime regime)
{
    require_omega(omega, "q_inverse_asymptotic");
    const double nu = model.nu();
    if (regime == Regime::high) {
        const double a = std::numbers::sqrt2 * (nu + 1.0);
        return a / (std::sqrt(omega) + a);
    }
    return 2.0 * (nu + 1.0) * (nu + 3.0) / omega;
}

}  // namespace besselq::qfactor
