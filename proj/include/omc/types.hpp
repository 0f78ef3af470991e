#pragma once

#include <Eigen/Dense>

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace omc {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Domain aliases. All are dense column vectors; the names track the role a
// vector plays, not a distinct representation.
using SeedVector = Vector;       // u, entries in [0,1], length D_u
using Statistics = Vector;       // summary statistics, length D_y
using ParameterVector = Vector;  // theta, length D_theta

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Uniform epsilon-ball acceptance kernel. `scale` holds the relative
/// importance of each statistic; the threshold itself stays scalar.
struct DiscrepancyKernel {
  double epsilon = 0.0;
  std::optional<Vector> scale;  // per-statistic, all entries > 0

  bool accepts(double rho) const { return rho <= epsilon; }
};

/// One seed vector together with everything its optimization produced.
/// Rejected particles are kept (with zero weight) so acceptance-fraction
/// and simulations-per-sample metrics stay computable.
struct Particle {
  SeedVector seed;
  ParameterVector theta_opt;   // optimizer endpoint
  ParameterVector theta_star;  // projected ellipse centroid
  Statistics f_at_opt;
  double discrepancy = kInf;
  Matrix jacobian;             // D_y x D_theta, evaluated at theta_opt
  double raw_weight = 0.0;     // p(theta_star) * det(J^T J)^{-1/2}
  double log_weight = -kInf;   // stable form of raw_weight
  long sim_count = 0;
  bool accepted = false;
};

/// Weighted particle set representing the posterior. The delta-mixture
/// constant gamma and the kernel normalizer C(eps) cancel in the
/// normalization and are therefore never stored.
struct WeightedEnsemble {
  std::vector<Particle> particles;
  Vector normalized_weights;  // sums to 1 over accepted particles
  double kappa = 0.0;         // sum of raw weights
  double epsilon = 0.0;       // acceptance threshold used

  // summary metrics, filled by normalize()
  double ess = 0.0;
  double ess_over_n = 0.0;
  double acceptance_fraction = 0.0;
  double ss_mean = 0.0;  // mean simulations per sample

  std::size_t size() const { return particles.size(); }
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyPosteriorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnderdeterminedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by simulators whose state leaves the representable range
/// (population blow-up and the like). Optimizers treat it as an
/// infinite-discrepancy evaluation.
class SimulationDiverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownSimulatorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace omc
