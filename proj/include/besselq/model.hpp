#pragma once

// Material functions of the Bessel viscoelastic models in nondimensional
// time (relaxation time set to one, glass compliance J_g = 1).

#include <cstddef>

#include "besselq/specfun.hpp"

namespace besselq::model {

using specfun::Complex;

// Model parameter nu > -1.
class ModelOrder {
public:
    explicit ModelOrder(double nu);
    double nu() const { return nu_; }

private:
    double nu_;
};

enum class Regime { high, low };

struct DirichletTruncation {
    std::size_t n_zeros = 0;
    // Upper bound on the dropped part of the exponential sum (already
    // multiplied by 4(nu+1)).
    double tail_bound = 0.0;
};

struct CreepRateSample {
    double value = 0.0;
    DirichletTruncation truncation;
};

inline constexpr std::size_t kDefaultZeroCap = 100000;

/// Laplace transform of the creep rate,
/// 2(nu+1)/sqrt(s) * I_{nu+1}(sqrt s)/I_{nu+2}(sqrt s), principal sqrt.
Complex creep_rate_laplace(const ModelOrder& model, Complex s);

/// s * J~(s) = I_nu(sqrt s)/I_{nu+2}(sqrt s).
Complex creep_compliance_laplace(const ModelOrder& model, Complex s);

/// Creep rate Psi(t) = 4(nu+1)(nu+2) + 4(nu+1) Sum_k exp(-j_{nu+2,k}^2 t).
/// Zeros are added until the tail bound drops below rel_tol * Psi; more than
/// max_zeros raises TruncationError.
CreepRateSample creep_rate_time(const ModelOrder& model, double t,
                                const specfun::SeriesPolicy& policy = {},
                                std::size_t max_zeros = kDefaultZeroCap);

/// Same, drawing zeros from a precomputed table of J_{nu+2} zeros; the table
/// size is the zero cap.
CreepRateSample creep_rate_time(const ModelOrder& model, double t,
                                const specfun::BesselZeroTable& zeros,
                                const specfun::SeriesPolicy& policy = {});

/// Two-term expansion of s J~(s): 1 + 2(nu+1) s^(-1/2) for s -> inf,
/// 2(nu+2)/(nu+3) + 4(nu+1)(nu+2)/s for s -> 0.
Complex creep_compliance_asymptotic(const ModelOrder& model, Complex s, Regime regime);

/// Q^-1 of the fractional Maxwell model of order beta in (0, 1];
/// beta = 1 is the ordinary Maxwell body, 1/(omega tau).
double frac_maxwell_q_inverse(double beta, double omega_tau);

}  // namespace besselq::model
