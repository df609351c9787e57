// Acceptance suite: one PASS/FAIL line per criterion, with measured values,
// tolerances and wall time. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bsimplex/estimate.hpp"
#include "bsimplex/ineq.hpp"
#include "bsimplex/monotone.hpp"
#include "bsimplex/rng.hpp"
#include "bsimplex/simplex.hpp"
#include "bsimplex/specfun.hpp"
#include "bsimplex/spoly.hpp"

namespace {

using namespace bsimplex;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

Outcome central_binomial() {
  int checked = 0;
  int failures = 0;
  for (int d = 1; d <= 4; ++d) {
    for (int m = 0; m <= 60; ++m) {
      ++checked;
      if (!central_binomial_identity(d, m).equal) ++failures;
    }
  }
  return {failures == 0, fmt("%d/%d (d,m) pairs exactly equal", checked - failures, checked)};
}

Outcome closed_form_integral() {
  double worst = 0.0;
  for (int d = 1; d <= 3; ++d) {
    for (int m = 1; m <= 200; ++m) {
      const double exact = s_integral_exact({1, 1, m, d});
      const double closed = s_integral_closed_form(d, m);
      worst = std::max(worst, std::fabs(exact - closed) / closed);
    }
  }
  return {worst <= 1e-11, fmt("max relative gap %.3e (tol 1e-11)", worst)};
}

Outcome integral_constant() {
  const double expected[] = {0.8862269255, 0.5, 0.2215567314};
  const std::vector<int> ms{10, 20, 40, 80, 160, 320};
  bool pass = true;
  std::string detail;
  for (int d = 1; d <= 3; ++d) {
    const auto rows = s_convergence_table(d, 1, 1, ms);
    const double limit = rows.front().limit;
    double peak = 0.0;
    for (const auto& row : rows) peak = std::max(peak, row.scaled_error);
    const double first_error = std::fabs(rows.front().value - limit);
    const double last_error = std::fabs(rows.back().value - limit);
    const bool limit_ok = std::fabs(limit - expected[d - 1]) <= 1e-10;
    const bool bounded = peak <= 2.0 * rows.front().scaled_error;
    const bool shrinks = last_error * 10.0 <= first_error;
    pass = pass && limit_ok && bounded && shrinks;
    detail += fmt("d=%d limit=%.10f m*err max/first=%.3f err(10)/err(320)=%.1f; ", d, limit,
                  peak / rows.front().scaled_error, first_error / last_error);
  }
  return {pass, detail};
}

Outcome complete_monotonicity() {
  const auto grid = linear_grid(0.1, 10.0, 0.1);
  Rng dims(20240601);
  int passed = 0;
  double worst = INFINITY;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const int d = static_cast<int>(dims.uniform_int(1, 5));
    const auto report = cm_scan(random_instance(d, Rng::derive_seed(4000, i)), grid, 6);
    if (report.pass) ++passed;
    worst = std::min({worst, report.worst_derivative_margin, report.worst_difference_margin});
  }
  ScanOptions corrupt;
  corrupt.corrupt = true;
  const auto broken = cm_scan(random_instance(2, Rng::derive_seed(4000, 0)), grid, 6, corrupt);
  return {passed == 200 && !broken.pass,
          fmt("%d/200 instances certified (h' to h^(7), differences to order 6), "
              "smallest margin %.3e; corrupted instance %s (violation %.3e)",
              passed, worst, broken.pass ? "passed" : "rejected", broken.max_violation)};
}

Outcome kl_limit_check() {
  const auto grid = log_grid(0.1, 1e4, 400);
  Rng dims(77);
  double worst_gap = 0.0;
  bool decreasing = true;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto inst = random_instance(static_cast<int>(dims.uniform_int(1, 5)), Rng::derive_seed(5000, i));
    worst_gap = std::max(worst_gap, std::fabs(h_derivative(inst, 1e4, 1) - kl_limit(inst)));
    double previous = INFINITY;
    for (double a : grid) {
      const double v = h_derivative(inst, a, 1);
      if (!(v < previous)) decreasing = false;
      previous = v;
    }
  }
  return {worst_gap <= 5e-4 && decreasing,
          fmt("max |h'(1e4) - KL| = %.3e (tol 5e-4); h' strictly decreasing: %s", worst_gap,
              decreasing ? "yes" : "no")};
}

Outcome j_positivity() {
  Rng rng(606);
  int positive = 0;
  int drawn = 0;
  double smallest = INFINITY;
  while (drawn < 10'000) {
    const auto d = static_cast<std::size_t>(rng.uniform_int(1, 6));
    auto u = rng.dirichlet(std::vector<double>(d + 1, 1.0));
    if (std::any_of(u.begin(), u.end(), [](double v) { return !(v > 0.0); })) continue;
    // Half the draws log-uniform in y - 1, half uniform in y.
    const double y = drawn % 2 == 0 ? 1.0 + rng.log_uniform(1e-9, 1e6 - 1.0)
                                    : 1.0 + (1e6 - 1.0) * rng.uniform_open();
    const double v = j_eval(u, y);
    smallest = std::min(smallest, v);
    if (v > 0.0) ++positive;
    ++drawn;
  }
  return {positive == drawn, fmt("%d/%d draws positive, min J = %.3e", positive, drawn, smallest)};
}

Outcome coefficient_inequalities() {
  const auto report = fuzz_inequalities(10'000, 5, 20240607);
  const bool pass = report.min_logconvexity >= -1e-10 && report.min_exchange >= -1e-10 &&
                    report.min_superadditivity > 0.0 && report.max_abs_equality <= 1e-12;
  return {pass, fmt("min (a)=%.3e (c)=%.3e (b)=%.3e; max |equality| = %.3e", report.min_logconvexity,
                    report.min_exchange, report.min_superadditivity, report.max_abs_equality)};
}

Outcome local_clt() {
  bool pass = true;
  std::string detail;
  for (int d = 1; d <= 2; ++d) {
    const std::vector<int> ms = d == 1 ? std::vector<int>{16, 64, 256, 1024} : std::vector<int>{16, 64, 256};
    for (const auto& [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
      const auto rows = lclt_compare(r, s, barycenter(d), ms);
      bool decreasing = true;
      for (std::size_t i = 1; i < rows.size(); ++i) decreasing = decreasing && rows[i].abs_error < rows[i - 1].abs_error;
      pass = pass && decreasing;
      detail += fmt("d=%d (%d,%d) %.2e->%.2e%s; ", d, r, s, rows.front().abs_error, rows.back().abs_error,
                    decreasing ? "" : " NOT DECREASING");
    }
  }
  return {pass, detail};
}

Outcome domination() {
  Rng rng(909);
  double worst = -INFINITY;
  for (int d = 1; d <= 3; ++d) {
    std::vector<SimplexPoint> grid;
    while (grid.size() < 50) {
      auto x = SimplexPoint::from_barycentric(rng.dirichlet(std::vector<double>(static_cast<std::size_t>(d) + 1, 1.0)));
      if (x.interior()) grid.push_back(std::move(x));
    }
    for (int m = 1; m <= 30; ++m) {
      const SPolyEvaluator base({1, 1, m, d});
      std::vector<double> base_values;
      for (const auto& x : grid) base_values.push_back(base(x));
      for (int r = 1; r <= 3; ++r) {
        for (int s = 1; s <= 3; ++s) {
          const SPolyEvaluator other({r, s, m, d});
          for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, other(grid[i]) - base_values[i]);
        }
      }
    }
  }
  return {worst <= 1e-12, fmt("max S_{r,s,m} - S_{1,1,m} = %.3e (tol 1e-12)", worst)};
}

Outcome determinant() {
  Rng rng(1010);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = static_cast<std::size_t>(rng.uniform_int(1, 6));
    const auto x = SimplexPoint::from_barycentric(rng.dirichlet(std::vector<double>(d + 1, 1.0)));
    const int r = static_cast<int>(rng.uniform_int(1, 3));
    const int s = static_cast<int>(rng.uniform_int(1, 3));
    worst = std::max(worst, det_covariance(r, s, x).relative_gap());
  }
  return {worst <= 1e-12, fmt("max relative gap %.3e over 1000 points (tol 1e-12)", worst)};
}

Outcome special_functions() {
  double duplication = 0.0;
  for (double y : log_grid(1e-3, 1e8, 1000)) duplication = std::max(duplication, std::fabs(duplication_residual(y)));
  double recurrence = 0.0;
  for (int n = 0; n <= kMaxPolygammaOrder; ++n) {
    const double factorial = std::tgamma(n + 1.0);
    for (double z : log_grid(0.1, 100.0, 200)) {
      const double expected = (n % 2 == 0 ? 1.0 : -1.0) * factorial / std::pow(z, n + 1);
      const double got = polygamma(n, z + 1.0) - polygamma(n, z);
      recurrence = std::max(recurrence, std::fabs(got - expected) / std::fabs(expected));
    }
  }
  double ratio = 0.0;
  for (double m : log_grid(10.0, 1e4, 1000)) ratio = std::max(ratio, gamma_ratio_residual(m));
  return {duplication <= 1e-12 && recurrence <= 1e-11 && ratio <= 0.05,
          fmt("duplication %.3e (tol 1e-12); recurrence %.3e (tol 1e-11); max m^2 residual %.5f (bound 0.05)",
              duplication, recurrence, ratio)};
}

Outcome estimators() {
  // Univariate coincidence.
  const auto cube = sample_uniform_hypercube(1, 1000, 1212);
  const auto line = cube.with_domain(Domain::kSimplex);
  double coincidence = 0.0;
  for (int m : {1, 3, 10, 50, 200}) {
    const BernsteinHypercubeCdf hyper(cube, m);
    const BernsteinSimplexCdf simp(line, m);
    for (int i = 0; i <= 200; ++i) {
      const double x = i / 200.0;
      coincidence = std::max(coincidence, std::fabs(hyper(std::vector<double>{x}) - simp(SimplexPoint({x}))));
    }
  }
  // Vertex exactness and convergence on a Dirichlet(1,1,1) sample.
  const auto samples = sample_dirichlet(std::vector<double>{1.0, 1.0, 1.0}, 2000, 1313);
  bool vertices = true;
  for (int m : {10, 100}) {
    const BernsteinSimplexCdf estimator(samples, m);
    for (const auto& v : std::vector<std::vector<double>>{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}) {
      vertices = vertices && estimator(SimplexPoint(v)) == empirical_cdf(samples, v);
    }
  }
  const int resolution = 20;
  const auto grid = evaluation_grid(Domain::kSimplex, 2, resolution);
  std::vector<double> reference;
  for (std::size_t i = 0; i < grid.size() / 2; ++i) {
    reference.push_back(empirical_cdf(samples, std::span<const double>(grid).subspan(2 * i, 2)));
  }
  const double err10 = sup_error_on_grid(evaluate_on_grid(samples, {10, EstimatorKind::kSimplexCdf}, resolution).values, reference);
  const double err100 = sup_error_on_grid(evaluate_on_grid(samples, {100, EstimatorKind::kSimplexCdf}, resolution).values, reference);
  return {coincidence <= 1e-12 && vertices && err100 < err10,
          fmt("coincidence gap %.3e (tol 1e-12); vertices exact: %s; sup error m=10 %.4f, m=100 %.4f",
              coincidence, vertices ? "yes" : "no", err10, err100)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact central-binomial identity", 30, central_binomial},
      {2, "closed-form integral of S_{1,1,m}", 60, closed_form_integral},
      {3, "asymptotic constant of the S_{1,1,m} integral", 120, integral_constant},
      {4, "complete monotonicity certificates", 60, complete_monotonicity},
      {5, "KL limit of h'", 10, kl_limit_check},
      {6, "positivity of J_u(y)", 5, j_positivity},
      {7, "coefficient inequalities", 30, coefficient_inequalities},
      {8, "local CLT for S_{r,s,m}", 180, local_clt},
      {9, "domination by S_{1,1,m}", 30, domination},
      {10, "covariance determinant identity", 5, determinant},
      {11, "special functions", 5, special_functions},
      {12, "Bernstein estimators", 60, estimators},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.budget_seconds;
    const bool pass = outcome.pass && in_time;
    if (!pass) ++failures;
    std::printf("[%s] %2d %s: %s [%.2f s of %.0f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.title,
                outcome.detail.c_str(), seconds, c.budget_seconds, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
