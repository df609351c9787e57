#ifndef BSIMPLEX_RNG_HPP_
#define BSIMPLEX_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace bsimplex {

// Seedable random source used by every sampler and fuzz harness.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. All conversions to uniforms, normals and gamma variates are done
// here rather than through <random> distributions, whose algorithms are
// implementation-defined; a given seed therefore produces the same draws on
// every platform.
//
// Gamma(shape) uses the Marsaglia-Tsang squeeze/rejection method for
// shape >= 1. For shape < 1 a Gamma(shape + 1) draw is scaled by U^(1/shape),
// done in log space so that very small shapes do not underflow.
//
// Instances are not thread-safe; give each worker its own instance seeded
// with derive_seed().
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform on (0, 1).
  double uniform_open();
  // Uniform integer on [lo, hi] (inclusive), unbiased.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  // exp(U) with U uniform on [ln lo, ln hi].
  double log_uniform(double lo, double hi);
  // Standard normal (Marsaglia polar method).
  double normal();
  // ln of a Gamma(shape, 1) variate.
  double log_gamma_variate(double shape);
  double gamma_variate(double shape);
  // Dirichlet(alpha) draw; result has alpha.size() entries summing to one.
  std::vector<double> dirichlet(std::span<const double> alpha);

  // SplitMix64 mix of (base, stream); used to give parallel workers or fuzz
  // trials independent, reproducible seeds.
  static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
};

}  // namespace bsimplex

#endif  // BSIMPLEX_RNG_HPP_
