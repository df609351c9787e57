#include "bsimplex/ineq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bsimplex/csv.hpp"
#include "bsimplex/rng.hpp"

namespace bsimplex {

namespace {

void require_positive_points(std::span<const double> a, const char* what) {
  for (double v : a) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError(std::string(what) + ": points must be positive and finite");
    }
  }
}

}  // namespace

double log_coeff(const CoeffInstance& inst, double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("log_coeff: a must be positive");
  double value = log_gamma(a * inst.weights.mass() + 1.0);
  for (double g : inst.weights.gamma()) {
    if (g > 0.0) value -= log_gamma(a * g + 1.0);
  }
  return value;
}

double check_weighted_logconvexity(const CoeffInstance& inst, std::span<const double> a,
                                   std::span<const double> lambda) {
  if (a.size() < 2) throw DomainError("weighted log-convexity: need at least two points");
  if (lambda.size() != a.size()) {
    throw DimensionError("weighted log-convexity: a and lambda sizes differ");
  }
  require_positive_points(a, "weighted log-convexity");
  double total = 0.0;
  for (double l : lambda) {
    if (!(l > 0.0 && l < 1.0)) throw DomainError("weighted log-convexity: lambda_j must lie in (0,1)");
    total += l;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw DomainError("weighted log-convexity: lambda must sum to 1");
  }
  double mixed = 0.0;
  double average = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    mixed += lambda[j] * log_coeff(inst, a[j]);
    average += lambda[j] * a[j];
  }
  // Equal points must give exactly zero; the weighted average of identical
  // values can differ from them by an ulp.
  if (std::all_of(a.begin(), a.end(), [&](double v) { return v == a[0]; })) average = a[0];
  return mixed - log_coeff(inst, average);
}

double check_superadditivity(const CoeffInstance& inst, std::span<const double> a) {
  if (a.size() < 2) throw DomainError("superadditivity: need at least two points");
  require_positive_points(a, "superadditivity");
  double total = 0.0;
  double parts = 0.0;
  for (double v : a) {
    total += v;
    parts += log_coeff(inst, v);
  }
  return log_coeff(inst, total) - parts;
}

double check_exchange(const CoeffInstance& inst, double a1, double a2, double a3) {
  const double points[] = {a1, a2, a3};
  require_positive_points(points, "exchange");
  if (a1 > a3) throw DomainError("exchange: requires a1 <= a3");
  return (log_coeff(inst, a1) + log_coeff(inst, a2 + a3)) -
         (log_coeff(inst, a1 + a2) + log_coeff(inst, a3));
}

const char* to_string(FuzzCheck check) {
  switch (check) {
    case FuzzCheck::kLogConvexity: return "logconvexity";
    case FuzzCheck::kSuperadditivity: return "superadditivity";
    case FuzzCheck::kExchange: return "exchange";
    case FuzzCheck::kLogConvexityEqual: return "logconvexity_equal";
    case FuzzCheck::kExchangeEqual: return "exchange_equal";
  }
  return "unknown";
}

FuzzReport fuzz_inequalities(std::size_t trials, int dmax, std::uint64_t seed,
                             const FuzzOptions& options) {
  if (trials == 0) throw DomainError("fuzz_inequalities: trials must be at least 1");
  if (dmax < 1) throw DomainError("fuzz_inequalities: dmax must be at least 1");

  constexpr double kInf = std::numeric_limits<double>::infinity();
  FuzzReport report;
  report.trials = trials;
  report.min_logconvexity = kInf;
  report.min_superadditivity = kInf;
  report.min_exchange = kInf;
  report.rows.reserve(trials * 5);
  const double sign = options.flip_sign ? -1.0 : 1.0;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng(Rng::derive_seed(seed, trial));
    const int d = static_cast<int>(rng.uniform_int(1, dmax));
    const double mass = rng.log_uniform(0.1, 50.0);
    auto gamma = rng.dirichlet(std::vector<double>(static_cast<std::size_t>(d) + 1, 1.0));
    for (double& g : gamma) g *= mass;
    const CoeffInstance inst{WeightVector(std::move(gamma))};

    const auto k = static_cast<std::size_t>(rng.uniform_int(2, 5));
    std::vector<double> a(k);
    for (double& v : a) v = rng.log_uniform(0.05, 20.0);
    std::vector<double> lambda;
    do {
      lambda = rng.dirichlet(std::vector<double>(k, 1.0));
    } while (std::any_of(lambda.begin(), lambda.end(), [](double l) { return !(l > 0.0 && l < 1.0); }));
    // Renormalize so the sum is 1 to rounding.
    double lambda_total = 0.0;
    for (double l : lambda) lambda_total += l;
    for (double& l : lambda) l /= lambda_total;

    auto record = [&](FuzzCheck check, double margin) {
      report.rows.push_back({trial, d, inst.weights.mass(), check, sign * margin});
      return sign * margin;
    };

    report.min_logconvexity = std::min(
        report.min_logconvexity,
        record(FuzzCheck::kLogConvexity, check_weighted_logconvexity(inst, a, lambda)));
    report.min_superadditivity = std::min(
        report.min_superadditivity, record(FuzzCheck::kSuperadditivity, check_superadditivity(inst, a)));

    const double a1 = std::min(a[0], a[1]);
    const double a3 = std::max(a[0], a[1]);
    const double a2 = rng.log_uniform(0.05, 20.0);
    report.min_exchange =
        std::min(report.min_exchange, record(FuzzCheck::kExchange, check_exchange(inst, a1, a2, a3)));

    const std::vector<double> same(k, a[0]);
    report.max_abs_equality = std::max(
        report.max_abs_equality,
        std::fabs(record(FuzzCheck::kLogConvexityEqual, check_weighted_logconvexity(inst, same, lambda))));
    report.max_abs_equality = std::max(
        report.max_abs_equality,
        std::fabs(record(FuzzCheck::kExchangeEqual, check_exchange(inst, a1, a2, a1))));
  }

  report.min_margin =
      std::min({report.min_logconvexity, report.min_superadditivity, report.min_exchange});
  report.pass = report.min_logconvexity >= -options.violation_tolerance &&
                report.min_exchange >= -options.violation_tolerance &&
                report.min_superadditivity > 0.0 &&
                report.max_abs_equality <= options.equality_tolerance;
  return report;
}

std::string fuzz_report_csv(const FuzzReport& report) {
  std::string text = "trial,d,M,check,margin\n";
  for (const auto& row : report.rows) {
    text += csv_row({std::to_string(row.trial), std::to_string(row.d), format_double(row.mass),
                     to_string(row.check), format_double(row.margin)});
  }
  return text;
}

}  // namespace bsimplex
