#ifndef BSIMPLEX_SPOLY_HPP_
#define BSIMPLEX_SPOLY_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bsimplex/simplex.hpp"

namespace bsimplex {

// S_{r,s,m}(x) = sum_{|k| <= m} P_{rk,rm}(x) P_{sk,sm}(x) on the d-simplex.
struct SPolyParams {
  int r = 1;
  int s = 1;
  int m = 1;
  int d = 1;

  void validate() const;
};

double s_eval(const SPolyParams& p, const SimplexPoint& x, std::uint64_t cap = kDefaultLatticeCap);

// Evaluates S_{r,s,m} at many points with shared log-factorial tables.
class SPolyEvaluator {
 public:
  explicit SPolyEvaluator(const SPolyParams& p, std::uint64_t cap = kDefaultLatticeCap);
  double operator()(const SimplexPoint& x) const;
  double operator()(std::span<const double> coords) const;

 private:
  SPolyParams p_;
  LogFactorialTable log_factorial_;
};

// phi_{r,s}(x) = gcd(r,s)^d / ((2 pi)^(d/2) sqrt(det Sigma)),
// det Sigma = (rs(r+s))^d prod_{i=1}^{d+1} x_i.
// Throws SingularityError if any barycentric coordinate is <= 1e-14.
//
// For gcd(r,s) = 1 this is the pointwise limit of m^(d/2) S_{r,s,m}(x). When
// gcd(r,s) = g > 1 the sum defining S only visits lattice points that are
// multiples of g in each direction and the limit is phi_{r,s}(x) / g^d.
double phi_eval(int r, int s, const SimplexPoint& x);

struct DetCovariance {
  double closed_form;  // (rs(r+s))^d prod x_i
  double dense;        // LU determinant of rs(r+s)(diag(x) - x x^T)
  double relative_gap() const;
};

DetCovariance det_covariance(int r, int s, const SimplexPoint& x);

struct CentralBinomialReport {
  int d = 0;
  int m = 0;
  // sum_{|k| <= m} prod_{i=1}^{d+1} C(2k_i, k_i)
  boost::multiprecision::cpp_int lhs;
  // 4^m prod_{j=1}^m ((d-1)/2 + j)/j
  boost::multiprecision::cpp_rational rhs;
  bool equal = false;
};

struct ExactBudget {
  int max_d = 4;
  int max_m = 60;
};

// Exact-arithmetic check of the central-binomial lattice identity. Throws
// CapacityError outside the budget.
CentralBinomialReport central_binomial_identity(int d, int m, const ExactBudget& budget = {});

// Integral of S_{r,s,m} over the simplex through the Dirichlet normalization:
// sum_k exp(lnC_{rm,rk} + lnC_{sm,sk} + sum lnG((r+s)k_i + 1) - lnG((r+s)m + d + 1)).
double s_integral_exact(const SPolyParams& p, std::uint64_t cap = kDefaultLatticeCap);

// 2^-d sqrt(pi) Gamma(m+1) / (Gamma(d/2 + 1/2) Gamma(m + d/2 + 1)); the
// r = s = 1 integral in closed form.
double s_integral_closed_form(int d, int m);

// 2^-d sqrt(pi) / Gamma(d/2 + 1/2).
double asymptotic_constant(int d);

// Limit of m^(d/2) * integral of S_{r,s,m}: the integral of phi_{r,s}/gcd^d,
// i.e. asymptotic_constant(d) * (2 / (rs(r+s)))^(d/2). Equals
// asymptotic_constant(d) for r = s = 1.
double s_integral_limit(int r, int s, int d);

// Bounded test functions for the weighted experiment.
class TestFunction {
 public:
  enum class Kind { kZero, kOne, kCoordinate, kProduct, kHalfSimplex };

  // "zero", "one", "x<i>", "x<i>x<j>" (1-based), "half".
  static TestFunction parse(const std::string& id);
  static TestFunction zero() { return TestFunction(Kind::kZero); }
  static TestFunction one() { return TestFunction(Kind::kOne); }
  static TestFunction coordinate(int i) { return TestFunction(Kind::kCoordinate, i); }
  static TestFunction product(int i, int j) { return TestFunction(Kind::kProduct, i, j); }
  static TestFunction half_simplex() { return TestFunction(Kind::kHalfSimplex); }

  double operator()(std::span<const double> x) const;
  Kind kind() const { return kind_; }
  // True if every coordinate the function reads exists in dimension d.
  bool fits(int d) const;
  std::string name() const;

 private:
  explicit TestFunction(Kind kind, int i = 0, int j = 0) : kind_(kind), i_(i), j_(j) {}
  Kind kind_;
  int i_;
  int j_;
};

// Midpoint rule for the integral over the simplex of
// h(x) (m^(d/2) S_{r,s,m}(x) - phi_{r,s}(x)) on the cubic grid of side
// 1/resolution, keeping only cells whose midpoint has every barycentric
// coordinate >= 1/(2 resolution).
double weighted_integral_experiment(const SPolyParams& p, const TestFunction& h, int resolution,
                                    std::uint64_t cap = kDefaultLatticeCap);

// Default quadrature resolution per dimension (200 for d = 1, 120 for d = 2).
int default_resolution(int d);

// m^2 |Gamma(m+1)/(sqrt(m) Gamma(m+1/2)) - 1 - 1/(8m)|, m >= 1. The log of
// the ratio is assembled from Stirling remainders so it keeps ~1e-16
// absolute accuracy for large m.
double gamma_ratio_residual(double m);

struct ConvergenceRow {
  int d;
  int r;
  int s;
  int m;
  double value;  // m^(d/2) * integral of S_{r,s,m}
  double limit;  // s_integral_limit(r, s, d)
  double scaled_error;  // m * |value - limit|
};

std::vector<ConvergenceRow> s_convergence_table(int d, int r, int s, std::span<const int> m_list,
                                                std::uint64_t cap = kDefaultLatticeCap);

// Header "d,r,s,m,value,limit,scaled_error".
std::string convergence_csv(std::span<const ConvergenceRow> rows, bool with_header = true);

struct LcltRow {
  int d;
  int r;
  int s;
  int m;
  double scaled_s;   // m^(d/2) S_{r,s,m}(x)
  double phi;        // phi_{r,s}(x)
  double abs_error;  // |scaled_s - phi|
};

std::vector<LcltRow> lclt_compare(int r, int s, const SimplexPoint& x, std::span<const int> m_list,
                                  std::uint64_t cap = kDefaultLatticeCap);

// Header "d,r,s,m,scaled_s,phi,abs_error".
std::string lclt_csv(std::span<const LcltRow> rows, bool with_header = true);

SimplexPoint barycenter(int d);

}  // namespace bsimplex

#endif  // BSIMPLEX_SPOLY_HPP_
