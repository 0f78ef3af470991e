#pragma once

#include "omc/types.hpp"

#include <functional>

namespace omc {

/// rho = ||(y - x) ./ scale||_2; acceptance is rho <= epsilon.
/// scale defaults to all-ones when the kernel carries none.
double discrepancy(const Statistics& y, const Statistics& x,
                   const DiscrepancyKernel& kernel);

/// Effective sample size 1 / sum(w_i^2) of a normalized weight vector.
/// Throws if the weights do not sum to 1 within 1e-9.
double ess(const Vector& normalized_weights);

/// Normalize raw particle weights into a posterior ensemble:
/// kappa = sum of raw weights, w_i = raw_i / kappa (computed in log space).
/// Also fills the ensemble summary metrics. Throws EmptyPosteriorError when
/// no accepted particle carries positive weight.
WeightedEnsemble normalize(std::vector<Particle> particles, double epsilon);

/// sum_i w_i h(theta_star_i), evaluated at the ball centers.
Vector posterior_expectation(const std::function<Vector(const ParameterVector&)>& h,
                             const WeightedEnsemble& ensemble);

/// Weighted posterior mean over theta_star.
Vector ensemble_mean(const WeightedEnsemble& ensemble);

/// Weighted posterior variance (per coordinate) over theta_star.
Vector ensemble_variance(const WeightedEnsemble& ensemble);

/// Delta-method Monte Carlo standard error of ensemble_mean:
/// sqrt(sum_i w_i^2 (theta_i - mean)^2) per coordinate.
Vector ensemble_mean_standard_error(const WeightedEnsemble& ensemble);

}  // namespace omc
