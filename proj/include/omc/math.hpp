#pragma once

#include "omc/types.hpp"

namespace omc {

/// Inverse CDF of the standard normal, accurate to full double precision
/// (rational initial guess plus one Halley refinement). p must lie in (0,1).
double standard_normal_quantile(double p);

/// Inverse error function on (-1,1), derived from the normal quantile.
double erf_inv(double p);

/// log(sum(exp(v))) over the finite entries of v; -inf if none are finite.
double log_sum_exp(const Vector& v);

/// Weighted q-quantile (linear interpolation on the cumulative weight grid).
/// Weights must be nonnegative with a positive sum.
double weighted_quantile(const Vector& values, const Vector& weights, double q);

/// Unweighted q-quantile of a sorted vector, linearly interpolated.
double sorted_quantile(const Vector& sorted_values, double q);

}  // namespace omc
