#pragma once

// Inverse quality factor Q^-1(omega; nu) = -Im{sJ~(i omega)} / Re{sJ~(i omega)}
// of the Bessel models, by three routes:
//   fg_series    - ratio of f/g series products (valid below the crossover),
//   kelvin       - ber/bei of orders nu and nu+2 at sqrt(omega),
//   direct_ratio - I_nu/I_{nu+2} at sqrt(i omega) by continued fractions.

#include <string_view>

#include "besselq/model.hpp"
#include "besselq/specfun.hpp"

namespace besselq::qfactor {

using model::ModelOrder;
using model::Regime;

enum class Route { fg_series, kelvin, direct_ratio };

std::string_view to_string(Route route);

struct QEvaluation {
    double omega = 0.0;
    double q_inverse = 0.0;
    Route route = Route::direct_ratio;
    double est_rel_error = 0.0;
};

struct QOptions {
    // Frequency above which the alternating f/g series are abandoned.
    double crossover = 324.0;
    // Largest tolerated relative discrepancy between routes in the overlap band.
    double overlap_tolerance = 1e-7;
    specfun::SeriesPolicy policy{};

    // Overlap band [crossover/sqrt(10), crossover*sqrt(10)].
    double overlap_low() const;
    double overlap_high() const;
    void validate() const;
};

/// (f_nu f_{nu+2} + g_nu g_{nu+2}) / (g_nu f_{nu+2} - f_nu g_{nu+2}).
/// Throws CancellationError above the crossover or when a series is flagged.
QEvaluation q_inverse_fg(const ModelOrder& model, double omega, const QOptions& options = {});

/// (bei_{nu+2} ber_nu - bei_nu ber_{nu+2}) / (bei_nu bei_{nu+2} + ber_nu ber_{nu+2})
/// at sqrt(omega). Throws OverflowError once ber/bei are not representable.
QEvaluation q_inverse_kelvin(const ModelOrder& model, double omega, const QOptions& options = {});

/// -Im/Re of I_nu(z)/I_{nu+2}(z), z = sqrt(i omega). Valid at any omega > 0.
QEvaluation q_inverse_direct(const ModelOrder& model, double omega, const QOptions& options = {});

/// fg route below the overlap band, direct route above it. Inside the band
/// the direct value is cross-checked against fg (at or below the crossover)
/// or kelvin (above it); the value on the matching side of the crossover is
/// returned with est_rel_error set to the discrepancy. A discrepancy above
/// options.overlap_tolerance raises InconsistencyError.
QEvaluation q_inverse(const ModelOrder& model, double omega, const QOptions& options = {});

/// high: sqrt2 (nu+1) / (sqrt(omega) + sqrt2 (nu+1)); low: 2 (nu+1)(nu+3) / omega.
double q_inverse_asymptotic(const ModelOrder& model, double omega, Regime regime);

}  // namespace besselq::qfactor
