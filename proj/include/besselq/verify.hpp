#pragma once

// Cross-checks that tie the independent representations together: the
// three Q^-1 routes, the Dirichlet series against its Laplace transform, and
// the zeros of J against the Rayleigh-Sneddon sum.

#include <cstddef>
#include <span>

#include "besselq/model.hpp"
#include "besselq/qfactor.hpp"

namespace besselq::verify {

struct RouteAgreement {
    double max_discrepancy = 0.0;
    double worst_omega = 0.0;
};

/// Largest pairwise relative discrepancy among the fg, kelvin and direct
/// routes over the given frequencies. Exceptions from a route propagate.
RouteAgreement three_route_agreement(const model::ModelOrder& model, std::span<const double> omegas,
                                     const qfactor::QOptions& options = {});

/// Kelvin against direct only (above the crossover).
RouteAgreement kelvin_direct_agreement(const model::ModelOrder& model, std::span<const double> omegas,
                                       const qfactor::QOptions& options = {});

/// Sum_{k<=count} j_{nu,k}^-2 plus the tail Sum_{k>count} ((k + nu/2 - 1/4) pi)^-2.
/// Converges to 1/(4(nu+1)).
double rayleigh_sneddon_sum(double nu, std::size_t count = 10000);

struct LaplaceCheck {
    // c/s + adaptive quadrature of e^{-st}(Psi(t) - c), c = 4(nu+1)(nu+2).
    double quadrature = 0.0;
    double closed_form = 0.0;
    double rel_error = 0.0;
};

/// Numerical Laplace transform of the Dirichlet series for real s > 0,
/// against creep_rate_laplace.
LaplaceCheck laplace_consistency(const model::ModelOrder& model, double s);

}  // namespace besselq::verify
