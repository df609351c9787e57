#ifndef BSIMPLEX_INEQ_HPP_
#define BSIMPLEX_INEQ_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bsimplex/simplex.hpp"

namespace bsimplex {

// Weights defining C(a) = Gamma(aM + 1) / prod Gamma(a gamma_i + 1).
struct CoeffInstance {
  WeightVector weights;
};

// ln C(a), a > 0.
double log_coeff(const CoeffInstance& inst, double a);

// All margins below are log-scale and signed; the inequality holds when the
// margin is >= 0 (strictly > 0 where stated).

// sum lambda_j ln C(a_j) - ln C(sum lambda_j a_j). Needs k >= 2 points,
// lambda_j in (0,1) summing to one. Zero iff all a_j coincide.
double check_weighted_logconvexity(const CoeffInstance& inst, std::span<const double> a,
                                   std::span<const double> lambda);

// ln C(sum a_j) - sum ln C(a_j); strictly positive unless only one weight is
// nonzero (then C == 1 and the margin is 0).
double check_superadditivity(const CoeffInstance& inst, std::span<const double> a);

// [ln C(a1) + ln C(a2 + a3)] - [ln C(a1 + a2) + ln C(a3)] for a1 <= a3.
// Zero iff a1 == a3.
double check_exchange(const CoeffInstance& inst, double a1, double a2, double a3);

enum class FuzzCheck { kLogConvexity, kSuperadditivity, kExchange, kLogConvexityEqual, kExchangeEqual };

const char* to_string(FuzzCheck check);

struct FuzzRow {
  std::size_t trial;
  int d;
  double mass;
  FuzzCheck check;
  double margin;
};

struct FuzzReport {
  std::size_t trials = 0;
  std::vector<FuzzRow> rows;
  double min_logconvexity = 0.0;      // (a), distinct points
  double min_superadditivity = 0.0;   // (b)
  double min_exchange = 0.0;          // (c), a1 < a3
  double max_abs_equality = 0.0;      // equality cases of (a) and (c)
  double min_margin = 0.0;            // over (a), (b), (c)
  bool pass = false;
};

struct FuzzOptions {
  double violation_tolerance = 1e-10;
  double equality_tolerance = 1e-12;
  // Test hook: flips the sign of every margin so the harness must fail.
  bool flip_sign = false;
};

// Random instances: d uniform on {1..dmax}; M log-uniform on [0.1, 50];
// gamma = M * Dirichlet(1,...,1); k uniform on {2..5} points a_j log-uniform
// on [0.05, 20]; lambda ~ Dirichlet(1,...,1). Each trial draws from its own
// generator seeded by Rng::derive_seed(seed, trial). pass iff no (a)/(c)
// margin falls below -violation_tolerance, every (b) margin is strictly
// positive and every equality case is within equality_tolerance of 0.
FuzzReport fuzz_inequalities(std::size_t trials, int dmax, std::uint64_t seed,
                             const FuzzOptions& options = {});

// CSV text: header "trial,d,M,check,margin" followed by one row per check.
std::string fuzz_report_csv(const FuzzReport& report);

}  // namespace bsimplex

#endif  // BSIMPLEX_INEQ_HPP_
