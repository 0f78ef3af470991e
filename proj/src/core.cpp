#include "omc/core.hpp"

#include "omc/math.hpp"

#include <cmath>
#include <string>

namespace omc {

double discrepancy(const Statistics& y, const Statistics& x,
                   const DiscrepancyKernel& kernel) {
  if (y.size() != x.size()) {
    throw DimensionError("discrepancy: observed has length " + std::to_string(y.size()) +
                         " but simulated has length " + std::to_string(x.size()));
  }
  if (kernel.scale) {
    const Vector& s = *kernel.scale;
    if (s.size() != y.size()) {
      throw DimensionError("discrepancy: scale has length " + std::to_string(s.size()) +
                           " but statistics have length " + std::to_string(y.size()));
    }
    if ((s.array() <= 0.0).any()) {
      throw std::invalid_argument("discrepancy: kernel scale entries must be positive");
    }
    return ((y - x).array() / s.array()).matrix().norm();
  }
  return (y - x).norm();
}

double ess(const Vector& normalized_weights) {
  double sum = 0.0, sumsq = 0.0;
  for (Eigen::Index i = 0; i < normalized_weights.size(); ++i) {
    double w = normalized_weights[i];
    if (w < 0.0) throw std::invalid_argument("ess: negative weight");
    sum += w;
    sumsq += w * w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("ess: weights sum to " + std::to_string(sum) +
                                ", expected 1 within 1e-9");
  }
  return 1.0 / sumsq;
}

WeightedEnsemble normalize(std::vector<Particle> particles, double epsilon) {
  const std::size_t n = particles.size();
  Vector log_w(n);
  long accepted = 0;
  double sim_total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Particle& p = particles[i];
    sim_total += static_cast<double>(p.sim_count);
    if (p.accepted) {
      if (!(p.raw_weight > 0.0) || !std::isfinite(p.log_weight)) {
        throw std::invalid_argument(
            "normalize: accepted particle " + std::to_string(i) +
            " carries a nonpositive raw weight");
      }
      ++accepted;
      log_w[i] = p.log_weight;
    } else {
      if (p.raw_weight != 0.0) {
        throw std::invalid_argument("normalize: rejected particle " +
                                    std::to_string(i) + " carries nonzero weight");
      }
      log_w[i] = -kInf;
    }
  }
  if (accepted == 0) {
    throw EmptyPosteriorError(
        "empty posterior: no particle accepted at epsilon = " + std::to_string(epsilon) +
        "; consider a larger epsilon");
  }

  // Exponentiate after subtracting the max log weight so near-singular
  // Jacobian volumes cannot overflow the normalization.
  const double lse = log_sum_exp(log_w);
  WeightedEnsemble e;
  e.normalized_weights = Vector::Zero(n);
  double sumsq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!particles[i].accepted) continue;
    double w = std::exp(log_w[i] - lse);
    e.normalized_weights[i] = w;
    sumsq += w * w;
  }
  e.kappa = std::exp(lse);
  e.epsilon = epsilon;
  e.ess = 1.0 / sumsq;
  e.ess_over_n = e.ess / static_cast<double>(n);
  e.acceptance_fraction = static_cast<double>(accepted) / static_cast<double>(n);
  e.ss_mean = sim_total / static_cast<double>(n);
  e.particles = std::move(particles);
  return e;
}

Vector posterior_expectation(const std::function<Vector(const ParameterVector&)>& h,
                             const WeightedEnsemble& ensemble) {
  Vector acc;
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    double w = ensemble.normalized_weights[static_cast<Eigen::Index>(i)];
    if (w == 0.0) continue;
    Vector hv = h(ensemble.particles[i].theta_star);
    if (!hv.allFinite()) {
      throw std::invalid_argument("posterior_expectation: h returned a non-finite value at particle " +
                                  std::to_string(i));
    }
    if (acc.size() == 0) {
      acc = w * hv;
    } else {
      acc += w * hv;
    }
  }
  return acc;
}

Vector ensemble_mean(const WeightedEnsemble& ensemble) {
  return posterior_expectation([](const ParameterVector& t) { return t; }, ensemble);
}

Vector ensemble_variance(const WeightedEnsemble& ensemble) {
  Vector mu = ensemble_mean(ensemble);
  return posterior_expectation(
      [&mu](const ParameterVector& t) -> Vector {
        return (t - mu).array().square().matrix();
      },
      ensemble);
}

Vector ensemble_mean_standard_error(const WeightedEnsemble& ensemble) {
  Vector mu = ensemble_mean(ensemble);
  Vector acc = Vector::Zero(mu.size());
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    double w = ensemble.normalized_weights[static_cast<Eigen::Index>(i)];
    if (w == 0.0) continue;
    acc += (w * w) * (ensemble.particles[i].theta_star - mu).array().square().matrix();
  }
  return acc.cwiseSqrt();
}

}  // namespace omc
