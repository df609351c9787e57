#ifndef BSIMPLEX_ESTIMATE_HPP_
#define BSIMPLEX_ESTIMATE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bsimplex/sample_set.hpp"
#include "bsimplex/simplex.hpp"

namespace bsimplex {

// F_n(y) = #{j : y_j <= y componentwise} / n.
//
// This is the usual empirical cdf; it is what makes the Bernstein smoother
// below a cdf estimator. Throws DomainError on an empty sample set.
double empirical_cdf(const SampleSet& samples, std::span<const double> y);

// F_hat(x) = sum_{|k| <= m} F_n(k/m) P_{k,m}(x) on the simplex. The
// F_n(k/m) table is built once; evaluation is one lattice pass per point.
class BernsteinSimplexCdf {
 public:
  BernsteinSimplexCdf(const SampleSet& samples, int m, std::uint64_t cap = kDefaultLatticeCap);
  double operator()(const SimplexPoint& x) const;
  int degree() const { return m_; }

 private:
  int m_;
  int d_;
  std::vector<double> lattice_cdf_;  // F_n(k/m) in lattice order
};

double bernstein_cdf_simplex(const SampleSet& samples, int m, const SimplexPoint& x,
                             std::uint64_t cap = kDefaultLatticeCap);

// F_hat(x) = sum_{k in [0,m]^d} F_n(k/m) prod C(m,k_i) x_i^k_i (1-x_i)^(m-k_i).
class BernsteinHypercubeCdf {
 public:
  BernsteinHypercubeCdf(const SampleSet& samples, int m, std::uint64_t cap = kDefaultLatticeCap);
  double operator()(std::span<const double> x) const;

 private:
  int m_;
  int d_;
  std::vector<double> grid_cdf_;  // F_n(k/m), k_1 slowest
};

double bernstein_cdf_hypercube(const SampleSet& samples, int m, std::span<const double> x,
                               std::uint64_t cap = kDefaultLatticeCap);

// f_hat(x) = m^d sum_{k in [0,m-1]^d} P_n((k/m, (k+1)/m]) prod C(m-1,k_i) x_i^k_i (1-x_i)^(m-1-k_i).
// Cells are half-open on the left, so observations with a zero coordinate
// fall in no cell.
class BernsteinHypercubeDensity {
 public:
  BernsteinHypercubeDensity(const SampleSet& samples, int m,
                            std::uint64_t cap = kDefaultLatticeCap);
  double operator()(std::span<const double> x) const;

 private:
  int m_;
  int d_;
  std::vector<double> cell_mass_;  // P_n of each cell, k_1 slowest
};

double bernstein_density_hypercube(const SampleSet& samples, int m, std::span<const double> x,
                                   std::uint64_t cap = kDefaultLatticeCap);

// max_i |estimate_i - reference_i|; DimensionError if the lengths differ.
double sup_error_on_grid(std::span<const double> estimate, std::span<const double> reference);

enum class EstimatorKind { kSimplexCdf, kHypercubeCdf, kHypercubeDensity };

EstimatorKind parse_estimator_kind(const std::string& name);
const char* to_string(EstimatorKind kind);
Domain domain_of(EstimatorKind kind);

struct EstimatorConfig {
  int m = 1;
  EstimatorKind kind = EstimatorKind::kSimplexCdf;
};

struct GridEvaluation {
  std::size_t dim = 0;
  std::vector<double> points;  // row-major, dim per point
  std::vector<double> values;
};

// Points {i/resolution} with |i| <= resolution (simplex) or
// i in [0, resolution]^d (hypercube), in lexicographic order.
std::vector<double> evaluation_grid(Domain domain, int d, int resolution,
                                    std::uint64_t cap = kDefaultLatticeCap);

GridEvaluation evaluate_on_grid(const SampleSet& samples, const EstimatorConfig& config,
                                int resolution, std::uint64_t cap = kDefaultLatticeCap);

// Header "x1,...,xd,value".
std::string grid_csv(const GridEvaluation& evaluation);

}  // namespace bsimplex

#endif  // BSIMPLEX_ESTIMATE_HPP_
