#include "omc/math.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace omc {

namespace {

// Acklam's rational approximation to the normal quantile (~1e-9 absolute).
double quantile_initial_guess(double p) {
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;

  if (p < plow) {
    double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  double q = p - 0.5;
  double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double standard_normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("standard_normal_quantile: p must be in (0,1), got " +
                                std::to_string(p));
  }
  double x = quantile_initial_guess(p);
  // One Halley step against the exact CDF brings the guess to ~1 ulp.
  static const double inv_sqrt2 = 0.70710678118654752440;
  static const double sqrt_2pi = 2.50662827463100050242;
  double e = 0.5 * std::erfc(-x * inv_sqrt2) - p;
  double u = e * sqrt_2pi * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double erf_inv(double p) {
  if (!(p > -1.0 && p < 1.0)) {
    throw std::invalid_argument("erf_inv: argument must be in (-1,1)");
  }
  static const double inv_sqrt2 = 0.70710678118654752440;
  return standard_normal_quantile(0.5 * (p + 1.0)) * inv_sqrt2;
}

double log_sum_exp(const Vector& v) {
  double m = -kInf;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::isfinite(v[i]) && v[i] > m) m = v[i];
  }
  if (m == -kInf) return -kInf;
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::isfinite(v[i])) s += std::exp(v[i] - m);
  }
  return m + std::log(s);
}

double weighted_quantile(const Vector& values, const Vector& weights, double q) {
  if (values.size() != weights.size() || values.size() == 0) {
    throw DimensionError("weighted_quantile: values/weights size mismatch");
  }
  q = std::clamp(q, 0.0, 1.0);
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index a, Eigen::Index b) { return values[a] < values[b]; });

  double total = weights.sum();
  if (!(total > 0.0)) throw std::invalid_argument("weighted_quantile: zero total weight");

  // Midpoint rule: each atom sits at the center of its cumulative-weight slab.
  double target = q * total;
  double cum = 0.0;
  double prev_mid = -kInf, prev_val = 0.0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    double w = weights[order[k]];
    if (w <= 0.0) continue;
    double mid = cum + 0.5 * w;
    double val = values[order[k]];
    if (target <= mid) {
      if (prev_mid == -kInf) return val;
      double t = (target - prev_mid) / (mid - prev_mid);
      return prev_val + t * (val - prev_val);
    }
    prev_mid = mid;
    prev_val = val;
    cum += w;
  }
  return prev_val;
}

double sorted_quantile(const Vector& sorted_values, double q) {
  const Eigen::Index n = sorted_values.size();
  if (n == 0) throw std::invalid_argument("sorted_quantile: empty input");
  double pos = std::clamp(q, 0.0, 1.0) * static_cast<double>(n - 1);
  Eigen::Index lo = static_cast<Eigen::Index>(pos);
  Eigen::Index hi = std::min(lo + 1, n - 1);
  double frac = pos - static_cast<double>(lo);
  return sorted_values[lo] * (1.0 - frac) + sorted_values[hi] * frac;
}

}  // namespace omc
