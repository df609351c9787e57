#ifndef BSIMPLEX_SPECFUN_HPP_
#define BSIMPLEX_SPECFUN_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace bsimplex {

// Log-gamma, digamma and polygamma on the positive real axis.
//
// Arguments below a threshold are shifted upward with the recurrences
//   lnG(z+1) = lnG(z) + ln z,   psi^(n)(z+1) = psi^(n)(z) + (-1)^n n!/z^(n+1)
// and then evaluated with the Stirling/asymptotic series carrying Bernoulli
// numbers through B_16. On [0.5, 2.5] the log-gamma function uses its Taylor
// expansion about 1 so that the zeros at z = 1 and z = 2 keep full relative
// accuracy.
//
// All functions are pure and thread-safe.

inline constexpr int kMaxPolygammaOrder = 8;

// ln Gamma(z), z > 0 and finite. Throws DomainError otherwise.
double log_gamma(double z);

// lnGamma(z) - [(z - 1/2) ln z - z + ln(2 pi)/2], the Stirling remainder.
// Evaluated without forming lnGamma(z) for z >= 12, so differences of
// remainders at large arguments do not cancel catastrophically.
double log_gamma_remainder(double z);

// psi^(order)(z) for 0 <= order <= kMaxPolygammaOrder and z > 0.
double polygamma(int order, double z);

inline double digamma(double z) { return polygamma(0, z); }
inline double trigamma(double z) { return polygamma(1, z); }

// ln( prod Gamma(alpha_i) / Gamma(sum alpha_i) ), all alpha_i > 0.
double log_dirichlet_beta(std::span<const double> alpha);

// Residual of the Legendre duplication formula in log form,
//   y ln 4 - [ln 2 + ln(pi)/2 + lnG(2y) - lnG(y) - lnG(y + 1/2)].
// For y >= 12 the O(y ln y) parts are combined analytically and only the
// Stirling remainders are evaluated numerically; below that the log-gamma
// values are used directly.
double duplication_residual(double y);

// Table of ln(k!) for k = 0..max_k. Entries come from log_gamma(k + 1).
class LogFactorialTable {
 public:
  explicit LogFactorialTable(std::size_t max_k);

  double operator()(std::size_t k) const { return values_[k]; }
  std::size_t max_k() const { return values_.size() - 1; }

 private:
  std::vector<double> values_;
};

}  // namespace bsimplex

#endif  // BSIMPLEX_SPECFUN_HPP_
