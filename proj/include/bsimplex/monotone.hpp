#ifndef BSIMPLEX_MONOTONE_HPP_
#define BSIMPLEX_MONOTONE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bsimplex/simplex.hpp"

namespace bsimplex {

// The pair (weights, point) defining
//   g(a) = Gamma(aM + 1) / prod Gamma(a gamma_i + 1) * prod x_i^(a gamma_i).
// The point must be strictly interior and carry as many barycentric
// coordinates as there are weights.
class MonotoneInstance {
 public:
  MonotoneInstance(WeightVector weights, SimplexPoint point);

  const WeightVector& weights() const { return weights_; }
  const SimplexPoint& point() const { return point_; }
  std::size_t dim() const { return point_.dim(); }

 private:
  WeightVector weights_;
  SimplexPoint point_;
};

// ln g(a) from raw arrays. Weights equal to zero are skipped, which is the
// same as deleting their coordinate; x need not sum to one here.
double log_g_weights(std::span<const double> gamma, std::span<const double> x, double a);

double log_g(const MonotoneInstance& inst, double a);
double g_eval(const MonotoneInstance& inst, double a);

inline constexpr int kMaxHDerivativeOrder = 7;

// h^(n)(a) for h = -ln g and 1 <= n <= 7:
//   n = 1:  -M psi(aM+1) + sum gamma_i psi(a gamma_i + 1) - sum gamma_i ln x_i
//   n >= 2: -M^n psi^(n-1)(aM+1) + sum gamma_i^n psi^(n-1)(a gamma_i + 1)
double h_derivative(const MonotoneInstance& inst, double a, int n);

// h'(a) through the split d/a - M R(aM) + sum gamma_i R(a gamma_i)
// + sum gamma_i ln((gamma_i/M)/x_i), R(z) = psi(z) - ln z, with d the number
// of positive weights minus one.
double h_prime_decomposed(const MonotoneInstance& inst, double a);

// J_u(y) = 1/(y-1) - sum 1/(y^(1/u_i) - 1) for u in the open simplex (all
// entries positive, summing to 1 within 1e-12) and y > 1.
double j_eval(std::span<const double> u, double y);

// M * KL(gamma/M || x) with 0 ln 0 = 0: the limit of h'(a) as a -> infinity.
double kl_limit(const MonotoneInstance& inst);

struct ScanRow {
  double a;
  // "h<k>" for the derivative certificate on h^(k), "dg<n>" for the n-th
  // forward difference of g.
  std::string order;
  double value;
  // Signed, scale-normalized; negative means the certificate failed here.
  double margin;
};

struct ScanReport {
  std::vector<double> grid;
  int order = 0;
  // Largest amount by which any margin falls below zero; 0 when none does.
  double max_violation = 0.0;
  bool pass = false;
  double worst_derivative_margin = 0.0;
  double worst_difference_margin = 0.0;
  std::vector<ScanRow> rows;

  // Merge is associative: grids concatenate, margins take the minimum
  // and max_violation the maximum.
  void merge(const ScanReport& other);
};

struct ScanOptions {
  // Forward-difference step for the difference certificate.
  double difference_step = 0.05;
  // (-1)^n Delta^n g(a) >= -difference_tolerance * g(a).
  double difference_tolerance = 1e-7;
  // (-1)^n h^(n+1)(a) > strictness_floor * (largest term in its sum).
  double strictness_floor = 1e-14;
  std::size_t max_grid_points = 1'000'000;
  bool keep_rows = true;
  // Test hook: evaluate the corrupted function with the sign of the
  // sum gamma_i ln x_i term flipped, which is increasing and must fail.
  bool corrupt = false;
};

// Complete-monotonicity certificates on a sorted grid of a-values:
//  (i)  derivative route: (-1)^n h^(n+1)(a) > 0 for 0 <= n <= max_order,
//       i.e. h' through h^(max_order+1) from polygamma values;
//  (ii) difference route: (-1)^n Delta_step^n g(a) >= -tol g(a) for
//       1 <= n <= max_order.
// Instances with fewer than two positive weights are rejected (their
// higher derivatives of h vanish identically).
ScanReport cm_scan(const MonotoneInstance& inst, std::span<const double> grid, int max_order,
                   const ScanOptions& options = {});

// CSV text: header "a,order,value,margin", the rows, then one summary line
// "# pass=<0|1> max_violation=<value>".
std::string scan_report_csv(const ScanReport& report, bool with_header = true);

// Random interior instance: d+1 barycentric coordinates from Dirichlet(1..1),
// M log-uniform on [0.1, 50], gamma = M * Dirichlet(1..1).
MonotoneInstance random_instance(int d, std::uint64_t seed);

// Evenly spaced grid from `start` to `stop` inclusive with spacing `step`.
std::vector<double> linear_grid(double start, double stop, double step);
std::vector<double> log_grid(double start, double stop, std::size_t points);

}  // namespace bsimplex

#endif  // BSIMPLEX_MONOTONE_HPP_
