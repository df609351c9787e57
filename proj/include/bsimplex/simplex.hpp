#ifndef BSIMPLEX_SIMPLEX_HPP_
#define BSIMPLEX_SIMPLEX_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bsimplex/errors.hpp"
#include "bsimplex/sample_set.hpp"
#include "bsimplex/specfun.hpp"

namespace bsimplex {

inline constexpr std::uint64_t kDefaultLatticeCap = 100'000'000;

// A point x of the closed d-simplex {x in [0,1]^d : |x| <= 1}, stored with its
// barycentric completion x_{d+1} = 1 - |x|. Coordinate sums up to 1 + 1e-12
// are accepted and the last coordinate is clamped to zero.
class SimplexPoint {
 public:
  explicit SimplexPoint(std::vector<double> coords);

  // From all d+1 barycentric coordinates; they must sum to 1 within 1e-12.
  static SimplexPoint from_barycentric(std::span<const double> bary);

  std::size_t dim() const { return bary_.size() - 1; }
  std::span<const double> coords() const { return std::span<const double>(bary_).first(dim()); }
  std::span<const double> barycentric() const { return bary_; }
  // i in [0, d]; index d is x_{d+1}.
  double operator[](std::size_t i) const { return bary_[i]; }
  double last() const { return bary_.back(); }
  // True iff every barycentric coordinate is strictly positive.
  bool interior() const;

 private:
  SimplexPoint() = default;
  std::vector<double> bary_;
};

// k in N_0^d with |k| <= m, plus k_{d+1} = m - |k|.
class MultiIndex {
 public:
  MultiIndex(std::vector<int> k, int m);

  std::size_t dim() const { return full_.size() - 1; }
  int degree() const { return m_; }
  std::span<const int> entries() const { return std::span<const int>(full_).first(dim()); }
  std::span<const int> full() const { return full_; }
  int operator[](std::size_t i) const { return full_[i]; }
  int last() const { return full_.back(); }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> full_;
  int m_;
};

// Nonnegative weights (gamma_1, ..., gamma_{d+1}) with total mass M > 0.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> gamma);
  // gamma_1..gamma_d plus the mass; gamma_{d+1} = M - |gamma| must be >= 0
  // (values down to -1e-12 * M are clamped to zero).
  static WeightVector from_partial(std::vector<double> gamma_d, double total_mass);

  std::size_t size() const { return gamma_.size(); }
  double mass() const { return mass_; }
  std::span<const double> gamma() const { return gamma_; }
  double operator[](std::size_t i) const { return gamma_[i]; }
  // Number of strictly positive weights.
  std::size_t effective_size() const;

 private:
  WeightVector() = default;
  std::vector<double> gamma_;
  double mass_ = 0.0;
};

// C(m + d, d), saturating at UINT64_MAX.
std::uint64_t lattice_size(int d, int m);

void check_lattice_capacity(int d, int m, std::uint64_t cap);

// Calls visit(std::span<const int> full) for every k with |k| <= m in
// lexicographic order of (k_1, ..., k_d); `full` carries d+1 entries, the last
// being m - |k|. The span is only valid during the call.
template <class Visitor>
void for_each_lattice_point(int d, int m, Visitor&& visit,
                            std::uint64_t cap = kDefaultLatticeCap) {
  check_lattice_capacity(d, m, cap);
  std::vector<int> full(static_cast<std::size_t>(d) + 1, 0);
  full[d] = m;
  int used = 0;
  for (;;) {
    visit(std::span<const int>(full));
    int j = d - 1;
    while (j >= 0) {
      if (used < m) {
        ++full[j];
        ++used;
        break;
      }
      used -= full[j];
      full[j] = 0;
      --j;
    }
    if (j < 0) return;
    full[d] = m - used;
  }
}

std::vector<MultiIndex> enumerate_lattice(int d, int m, std::uint64_t cap = kDefaultLatticeCap);

// ln P_{k,m}(x) for fixed degree m and point x, reused across many k.
class MultinomialKernel {
 public:
  MultinomialKernel(int m, const SimplexPoint& x);

  // full has d+1 entries summing to m. Returns -infinity when some x_i = 0
  // carries k_i > 0 (0^0 = 1 otherwise).
  double log_pmf(std::span<const int> full) const;

  int degree() const { return m_; }

 private:
  int m_;
  LogFactorialTable log_factorial_;
  std::vector<double> log_x_;
};

// ln P_{k,m}(x) = lnG(m+1) - sum lnG(k_i+1) + sum k_i ln x_i.
double multinomial_log_pmf(const MultiIndex& k, const SimplexPoint& x);

// sum over |k| <= m of P_{k,m}(x); one for every x up to rounding.
double pmf_normalization_check(int d, int m, const SimplexPoint& x,
                               std::uint64_t cap = kDefaultLatticeCap);

// n draws from Dirichlet(alpha) on the (alpha.size() - 1)-simplex; the stored
// coordinates are the first d barycentric components.
SampleSet sample_dirichlet(std::span<const double> alpha, std::size_t n, std::uint64_t seed);

// n draws uniform on [0,1]^d.
SampleSet sample_uniform_hypercube(std::size_t d, std::size_t n, std::uint64_t seed);

}  // namespace bsimplex

#endif  // BSIMPLEX_SIMPLEX_HPP_
