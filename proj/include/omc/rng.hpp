#pragma once

#include "omc/math.hpp"
#include "omc/types.hpp"

#include <cstdint>

namespace omc {

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ull;

/// splitmix64 finalizer (Steele, Lea & Flood; Vigna's fixed-increment form).
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Purpose tags for derived streams. A stream is a pure function of
/// (master seed, index, label); worker identity and timing never enter.
enum class StreamLabel : std::uint64_t {
  kSeedDraw = 1,        // the particle's u vector
  kOptimizerInit = 2,   // starting point draw
  kRwProposals = 3,     // random-walk proposal noise
  kRejectionTheta = 4,  // rejection sampler prior draws
  kRejectionSeed = 5,   // rejection sampler u draws
  kSmcMove = 6,         // SMC resample/perturb draws
  kSmcSeed = 7,         // SMC u draws
  kObserved = 8,        // reference seeds for synthetic observations
  kRepetition = 9,      // per-repetition master seeds in comparisons
};

/// Counter-based splittable stream: the key (master, index, label) is mixed
/// into an initial state, after which draws follow the splitmix64 sequence.
class RngStream {
 public:
  RngStream(std::uint64_t master, std::uint64_t index, StreamLabel label)
      : state_(mix64(mix64(master + kSplitMixGamma * (index + 1)) ^
                     (kSplitMixGamma * (static_cast<std::uint64_t>(label) + 1)))) {}

  std::uint64_t next_u64() {
    state_ += kSplitMixGamma;
    return mix64(state_);
  }

  /// Uniform draw in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform draw in the open interval (0,1); safe input for quantile
  /// transforms.
  double open_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via the inverse CDF (no rejection, fixed draw count).
  double normal() { return standard_normal_quantile(open_uniform()); }

  Vector uniforms(int n) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = uniform();
    return v;
  }

  Vector normals(int n) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace omc
