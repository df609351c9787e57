#include "bsimplex/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bsimplex/csv.hpp"
#include "bsimplex/rng.hpp"

namespace bsimplex {

namespace {

void require_positive_a(double a, const char* what) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError(std::string(what) + ": a must be positive and finite");
  }
}

// ln g(a), optionally with the sign of the x-term flipped (scan self-test).
double log_g_signed(std::span<const double> gamma, std::span<const double> x, double a,
                    double x_sign) {
  double mass = 0.0;
  for (double g : gamma) mass += g;
  double value = log_gamma(a * mass + 1.0);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] == 0.0) continue;
    value += -log_gamma(a * gamma[i] + 1.0) + x_sign * a * gamma[i] * std::log(x[i]);
  }
  return value;
}

struct HTerms {
  double value;
  double scale;  // largest |term| in the sum
};

// h^(n)(a) together with the magnitude of its largest term.
HTerms h_terms(const MonotoneInstance& inst, double a, int n, double x_sign) {
  const auto gamma = inst.weights().gamma();
  const double mass = inst.weights().mass();
  const auto& x = inst.point();
  double value = 0.0;
  double scale = 0.0;
  auto accumulate = [&](double term) {
    value += term;
    scale = std::max(scale, std::fabs(term));
  };
  if (n == 1) {
    accumulate(-mass * digamma(a * mass + 1.0));
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      if (gamma[i] == 0.0) continue;
      accumulate(gamma[i] * digamma(a * gamma[i] + 1.0));
      accumulate(-x_sign * gamma[i] * std::log(x[i]));
    }
  } else {
    accumulate(-std::pow(mass, n) * polygamma(n - 1, a * mass + 1.0));
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      if (gamma[i] == 0.0) continue;
      accumulate(std::pow(gamma[i], n) * polygamma(n - 1, a * gamma[i] + 1.0));
    }
  }
  return {value, scale};
}

double binomial_coefficient(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

MonotoneInstance::MonotoneInstance(WeightVector weights, SimplexPoint point)
    : weights_(std::move(weights)), point_(std::move(point)) {
  if (weights_.size() != point_.dim() + 1) {
    throw DimensionError("MonotoneInstance: need one weight per barycentric coordinate");
  }
  if (!point_.interior()) throw DomainError("MonotoneInstance: point must be interior");
}

double log_g_weights(std::span<const double> gamma, std::span<const double> x, double a) {
  require_positive_a(a, "log_g");
  if (gamma.size() != x.size()) throw DimensionError("log_g: gamma and x sizes differ");
  return log_g_signed(gamma, x, a, 1.0);
}

double log_g(const MonotoneInstance& inst, double a) {
  return log_g_weights(inst.weights().gamma(), inst.point().barycentric(), a);
}

double g_eval(const MonotoneInstance& inst, double a) { return std::exp(log_g(inst, a)); }

double h_derivative(const MonotoneInstance& inst, double a, int n) {
  require_positive_a(a, "h_derivative");
  if (n < 1 || n > kMaxHDerivativeOrder) {
    throw DomainError("h_derivative: order must lie in [1, 7]");
  }
  return h_terms(inst, a, n, 1.0).value;
}

double h_prime_decomposed(const MonotoneInstance& inst, double a) {
  require_positive_a(a, "h_prime_decomposed");
  const auto gamma = inst.weights().gamma();
  const double mass = inst.weights().mass();
  const auto& x = inst.point();
  auto remainder = [](double z) { return digamma(z) - std::log(z); };
  double value = -mass * remainder(a * mass);
  int positive = 0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] == 0.0) continue;
    ++positive;
    value += gamma[i] * remainder(a * gamma[i]) + gamma[i] * std::log((gamma[i] / mass) / x[i]);
  }
  return value + (positive - 1) / a;
}

double j_eval(std::span<const double> u, double y) {
  if (u.size() < 2) throw DomainError("j_eval: u needs at least two entries");
  if (!(y > 1.0) || !std::isfinite(y)) throw DomainError("j_eval: y must be finite and > 1");
  double total = 0.0;
  for (double v : u) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("j_eval: entries of u must be positive");
    total += v;
  }
  if (std::fabs(total - 1.0) > 1e-12) throw DomainError("j_eval: entries of u must sum to 1");

  const double log_y = std::log(y);
  if (log_y >= 1.0) {
    double value = 1.0 / std::expm1(log_y);
    for (double v : u) value -= 1.0 / std::expm1(log_y * total / v);
    return value;
  }
  // Near y = 1 the 1/ln y poles cancel exactly because sum u_i = 1; evaluate
  // f(t) = 1/(e^t - 1) - 1/t instead.
  auto f = [](double t) {
    if (t < 1e-2) {
      const double t2 = t * t;
      return -0.5 + t * (1.0 / 12.0 + t2 * (-1.0 / 720.0 + t2 * (1.0 / 30240.0 - t2 / 1209600.0)));
    }
    if (t > 700.0) return -1.0 / t;
    return 1.0 / std::expm1(t) - 1.0 / t;
  };
  double value = f(log_y);
  for (double v : u) value -= f(log_y * total / v);
  return value;
}

double kl_limit(const MonotoneInstance& inst) {
  const auto gamma = inst.weights().gamma();
  const double mass = inst.weights().mass();
  double value = 0.0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] == 0.0) continue;
    value += gamma[i] * std::log((gamma[i] / mass) / inst.point()[i]);
  }
  return std::max(0.0, value);
}

void ScanReport::merge(const ScanReport& other) {
  if (grid.empty() && rows.empty()) {
    *this = other;
    return;
  }
  grid.insert(grid.end(), other.grid.begin(), other.grid.end());
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  order = std::max(order, other.order);
  max_violation = std::max(max_violation, other.max_violation);
  worst_derivative_margin = std::min(worst_derivative_margin, other.worst_derivative_margin);
  worst_difference_margin = std::min(worst_difference_margin, other.worst_difference_margin);
  pass = pass && other.pass;
}

ScanReport cm_scan(const MonotoneInstance& inst, std::span<const double> grid, int max_order,
                   const ScanOptions& options) {
  if (max_order < 1 || max_order > kMaxHDerivativeOrder - 1) {
    throw DomainError("cm_scan: max_order must lie in [1, 6]");
  }
  if (grid.empty()) throw DomainError("cm_scan: empty grid");
  if (grid.size() > options.max_grid_points) {
    throw CapacityError("cm_scan: grid has " + std::to_string(grid.size()) +
                        " points, above the cap of " + std::to_string(options.max_grid_points));
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i])) {
      throw DomainError("cm_scan: grid values must be positive and finite");
    }
    if (i > 0 && grid[i] < grid[i - 1]) throw DomainError("cm_scan: grid must be sorted");
  }
  if (inst.weights().effective_size() < 2) {
    throw DomainError("cm_scan: degenerate instance (fewer than two positive weights)");
  }

  const double x_sign = options.corrupt ? -1.0 : 1.0;
  const auto gamma = inst.weights().gamma();
  const auto x = inst.point().barycentric();

  ScanReport report;
  report.grid.assign(grid.begin(), grid.end());
  report.order = max_order;
  report.worst_derivative_margin = std::numeric_limits<double>::infinity();
  report.worst_difference_margin = std::numeric_limits<double>::infinity();

  std::vector<double> log_values(static_cast<std::size_t>(max_order) + 1);
  for (double a : grid) {
    // (-1)^n h^(n+1)(a) > 0, n = 0..max_order.
    for (int n = 0; n <= max_order; ++n) {
      const HTerms t = h_terms(inst, a, n + 1, x_sign);
      const double value = (n % 2 == 0 ? 1.0 : -1.0) * t.value;
      const double scale = std::max(t.scale, std::numeric_limits<double>::min());
      const double margin = (value - options.strictness_floor * scale) / scale;
      report.worst_derivative_margin = std::min(report.worst_derivative_margin, margin);
      if (options.keep_rows) report.rows.push_back({a, "h" + std::to_string(n + 1), value, margin});
    }
    // (-1)^n Delta^n g(a) / g(a) = sum_j (-1)^j C(n,j) g(a + j step)/g(a).
    for (int j = 0; j <= max_order; ++j) {
      log_values[j] = log_g_signed(gamma, x, a + j * options.difference_step, x_sign);
    }
    for (int n = 1; n <= max_order; ++n) {
      double value = 0.0;
      for (int j = 0; j <= n; ++j) {
        const double ratio = std::exp(log_values[j] - log_values[0]);
        value += (j % 2 == 0 ? 1.0 : -1.0) * binomial_coefficient(n, j) * ratio;
      }
      const double margin = value + options.difference_tolerance;
      report.worst_difference_margin = std::min(report.worst_difference_margin, margin);
      if (options.keep_rows) report.rows.push_back({a, "dg" + std::to_string(n), value, margin});
    }
  }
  report.max_violation =
      std::max({0.0, -report.worst_derivative_margin, -report.worst_difference_margin});
  report.pass = report.worst_derivative_margin > 0.0 && report.worst_difference_margin >= 0.0;
  return report;
}

std::string scan_report_csv(const ScanReport& report, bool with_header) {
  std::string text;
  if (with_header) text += "a,order,value,margin\n";
  for (const auto& row : report.rows) {
    text += csv_row({format_double(row.a), row.order, format_double(row.value),
                     format_double(row.margin)});
  }
  text += "# pass=" + std::string(report.pass ? "1" : "0") +
          " max_violation=" + format_double(report.max_violation) + "\n";
  return text;
}

MonotoneInstance random_instance(int d, std::uint64_t seed) {
  if (d < 1) throw DomainError("random_instance: d must be at least 1");
  Rng rng(seed);
  const std::vector<double> ones(static_cast<std::size_t>(d) + 1, 1.0);
  const auto x = rng.dirichlet(ones);
  const double mass = rng.log_uniform(0.1, 50.0);
  auto gamma = rng.dirichlet(ones);
  for (double& g : gamma) g *= mass;
  return MonotoneInstance(WeightVector(std::move(gamma)), SimplexPoint::from_barycentric(x));
}

std::vector<double> linear_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !(stop >= start)) throw DomainError("linear_grid: need step > 0, stop >= start");
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = start + static_cast<double>(i) * step;
  return grid;
}

std::vector<double> log_grid(double start, double stop, std::size_t points) {
  if (!(start > 0.0) || !(stop >= start) || points < 2) {
    throw DomainError("log_grid: need 0 < start <= stop and at least two points");
  }
  std::vector<double> grid(points);
  const double a = std::log(start);
  const double b = std::log(stop);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
  }
  grid.front() = start;
  grid.back() = stop;
  return grid;
}

}  // namespace bsimplex
