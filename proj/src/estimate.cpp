#include "bsimplex/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bsimplex/csv.hpp"
#include "bsimplex/errors.hpp"
#include "bsimplex/specfun.hpp"
#include "bsimplex/summation.hpp"

namespace bsimplex {

namespace {

void require_samples(const SampleSet& samples, Domain domain, const char* what) {
  if (samples.empty()) throw DomainError(std::string(what) + ": empty sample set");
  if (samples.domain() != domain) {
    throw DomainError(std::string(what) + ": samples are tagged " + to_string(samples.domain()) +
                      ", expected " + to_string(domain));
  }
}

void require_degree(int m, const char* what) {
  if (m < 1) throw DomainError(std::string(what) + ": degree m must be at least 1");
}

std::uint64_t checked_power(int base, int exponent, std::uint64_t cap, const char* what) {
  std::uint64_t size = 1;
  for (int i = 0; i < exponent; ++i) {
    if (size > cap / static_cast<std::uint64_t>(base)) {
      throw CapacityError(std::string(what) + ": grid of " + std::to_string(base) + "^" +
                          std::to_string(exponent) + " points exceeds the cap");
    }
    size *= static_cast<std::uint64_t>(base);
  }
  return size;
}

// Visits every k in [0, side)^d with k_1 slowest.
template <class Visitor>
void for_each_box_point(int d, int side, Visitor&& visit) {
  std::vector<int> k(static_cast<std::size_t>(d), 0);
  for (;;) {
    visit(std::span<const int>(k));
    int j = d - 1;
    while (j >= 0 && ++k[j] == side) {
      k[j] = 0;
      --j;
    }
    if (j < 0) return;
  }
}

// exp(lnC(n,k) + k ln x + (n-k) ln(1-x)) for k = 0..n, with 0^0 = 1.
std::vector<double> binomial_weights(int n, double x, const LogFactorialTable& lf) {
  const double neg_inf = -std::numeric_limits<double>::infinity();
  const double log_x = x > 0.0 ? std::log(x) : neg_inf;
  const double log_1mx = x < 1.0 ? std::log(1.0 - x) : neg_inf;
  std::vector<double> w(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    double value = lf(static_cast<std::size_t>(n));
    if (k > 0) value += k * log_x - lf(static_cast<std::size_t>(k));
    if (n - k > 0) value += (n - k) * log_1mx - lf(static_cast<std::size_t>(n - k));
    w[k] = std::isinf(value) ? 0.0 : std::exp(value);
  }
  return w;
}

void require_unit_box(std::span<const double> x, std::size_t d, const char* what) {
  if (x.size() != d) throw DimensionError(std::string(what) + ": point dimension mismatch");
  for (double v : x) {
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError(std::string(what) + ": point outside [0,1]^d");
  }
}

// sum over k in [0,n]^d of table[k] * prod weights[i][k_i].
double tensor_contract(const std::vector<std::vector<double>>& weights,
                       const std::vector<double>& table, int n) {
  const int d = static_cast<int>(weights.size());
  PairwiseSum total;
  std::size_t flat = 0;
  for_each_box_point(d, n + 1, [&](std::span<const int> k) {
    double w = table[flat++];
    if (w == 0.0) {
      total.add(0.0);
      return;
    }
    for (int i = 0; i < d; ++i) w *= weights[i][k[i]];
    total.add(w);
  });
  return total.result();
}

}  // namespace

double empirical_cdf(const SampleSet& samples, std::span<const double> y) {
  if (samples.empty()) throw DomainError("empirical_cdf: empty sample set");
  if (y.size() != samples.dim()) throw DimensionError("empirical_cdf: point dimension mismatch");
  std::size_t count = 0;
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const auto p = samples.point(j);
    bool dominated = true;
    for (std::size_t i = 0; i < p.size() && dominated; ++i) dominated = p[i] <= y[i];
    if (dominated) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(samples.size());
}

BernsteinSimplexCdf::BernsteinSimplexCdf(const SampleSet& samples, int m, std::uint64_t cap)
    : m_(m), d_(static_cast<int>(samples.dim())) {
  require_samples(samples, Domain::kSimplex, "bernstein_cdf_simplex");
  require_degree(m, "bernstein_cdf_simplex");
  check_lattice_capacity(d_, m_, cap);
  lattice_cdf_.reserve(lattice_size(d_, m_));
  std::vector<double> y(samples.dim());
  for_each_lattice_point(d_, m_, [&](std::span<const int> full) {
    for (int i = 0; i < d_; ++i) y[i] = static_cast<double>(full[i]) / m_;
    lattice_cdf_.push_back(empirical_cdf(samples, y));
  });
}

double BernsteinSimplexCdf::operator()(const SimplexPoint& x) const {
  if (x.dim() != static_cast<std::size_t>(d_)) {
    throw DimensionError("bernstein_cdf_simplex: point dimension mismatch");
  }
  const MultinomialKernel kernel(m_, x);
  PairwiseSum total;
  std::size_t index = 0;
  for_each_lattice_point(d_, m_, [&](std::span<const int> full) {
    const double f = lattice_cdf_[index++];
    total.add(f == 0.0 ? 0.0 : f * std::exp(kernel.log_pmf(full)));
  });
  return total.result();
}

double bernstein_cdf_simplex(const SampleSet& samples, int m, const SimplexPoint& x,
                             std::uint64_t cap) {
  return BernsteinSimplexCdf(samples, m, cap)(x);
}

BernsteinHypercubeCdf::BernsteinHypercubeCdf(const SampleSet& samples, int m, std::uint64_t cap)
    : m_(m), d_(static_cast<int>(samples.dim())) {
  require_samples(samples, Domain::kHypercube, "bernstein_cdf_hypercube");
  require_degree(m, "bernstein_cdf_hypercube");
  grid_cdf_.reserve(checked_power(m + 1, d_, cap, "bernstein_cdf_hypercube"));
  std::vector<double> y(samples.dim());
  for_each_box_point(d_, m_ + 1, [&](std::span<const int> k) {
    for (int i = 0; i < d_; ++i) y[i] = static_cast<double>(k[i]) / m_;
    grid_cdf_.push_back(empirical_cdf(samples, y));
  });
}

double BernsteinHypercubeCdf::operator()(std::span<const double> x) const {
  require_unit_box(x, static_cast<std::size_t>(d_), "bernstein_cdf_hypercube");
  const LogFactorialTable lf(static_cast<std::size_t>(m_));
  std::vector<std::vector<double>> weights;
  for (double xi : x) weights.push_back(binomial_weights(m_, xi, lf));
  return tensor_contract(weights, grid_cdf_, m_);
}

double bernstein_cdf_hypercube(const SampleSet& samples, int m, std::span<const double> x,
                               std::uint64_t cap) {
  return BernsteinHypercubeCdf(samples, m, cap)(x);
}

BernsteinHypercubeDensity::BernsteinHypercubeDensity(const SampleSet& samples, int m,
                                                     std::uint64_t cap)
    : m_(m), d_(static_cast<int>(samples.dim())) {
  require_samples(samples, Domain::kHypercube, "bernstein_density_hypercube");
  require_degree(m, "bernstein_density_hypercube");
  cell_mass_.assign(checked_power(m, d_, cap, "bernstein_density_hypercube"), 0.0);
  const double unit = 1.0 / static_cast<double>(samples.size());
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const auto p = samples.point(j);
    std::size_t flat = 0;
    bool inside = true;
    for (int i = 0; i < d_ && inside; ++i) {
      const double v = std::min(p[i], 1.0);
      if (v <= 0.0) {
        inside = false;
        break;
      }
      // Cell k holds (k/m, (k+1)/m].
      int k = static_cast<int>(std::ceil(v * m_)) - 1;
      k = std::clamp(k, 0, m_ - 1);
      if (k > 0 && v <= static_cast<double>(k) / m_) --k;
      if (k < m_ - 1 && v > static_cast<double>(k + 1) / m_) ++k;
      flat = flat * static_cast<std::size_t>(m_) + static_cast<std::size_t>(k);
    }
    if (inside) cell_mass_[flat] += unit;
  }
}

double BernsteinHypercubeDensity::operator()(std::span<const double> x) const {
  require_unit_box(x, static_cast<std::size_t>(d_), "bernstein_density_hypercube");
  const LogFactorialTable lf(static_cast<std::size_t>(m_ - 1));
  std::vector<std::vector<double>> weights;
  for (double xi : x) weights.push_back(binomial_weights(m_ - 1, xi, lf));
  return std::pow(static_cast<double>(m_), d_) * tensor_contract(weights, cell_mass_, m_ - 1);
}

double bernstein_density_hypercube(const SampleSet& samples, int m, std::span<const double> x,
                                   std::uint64_t cap) {
  return BernsteinHypercubeDensity(samples, m, cap)(x);
}

double sup_error_on_grid(std::span<const double> estimate, std::span<const double> reference) {
  if (estimate.size() != reference.size()) {
    throw DimensionError("sup_error_on_grid: grids have different lengths");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < estimate.size(); ++i) {
    worst = std::max(worst, std::fabs(estimate[i] - reference[i]));
  }
  return worst;
}

EstimatorKind parse_estimator_kind(const std::string& name) {
  if (name == "simplex-cdf") return EstimatorKind::kSimplexCdf;
  if (name == "hypercube-cdf") return EstimatorKind::kHypercubeCdf;
  if (name == "hypercube-density") return EstimatorKind::kHypercubeDensity;
  throw DomainError("unknown estimator kind '" + name + "'");
}

const char* to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::kSimplexCdf: return "simplex-cdf";
    case EstimatorKind::kHypercubeCdf: return "hypercube-cdf";
    case EstimatorKind::kHypercubeDensity: return "hypercube-density";
  }
  return "unknown";
}

Domain domain_of(EstimatorKind kind) {
  return kind == EstimatorKind::kSimplexCdf ? Domain::kSimplex : Domain::kHypercube;
}

std::vector<double> evaluation_grid(Domain domain, int d, int resolution, std::uint64_t cap) {
  if (d < 1 || resolution < 1) throw DomainError("evaluation_grid: need d >= 1, resolution >= 1");
  std::vector<double> points;
  if (domain == Domain::kSimplex) {
    for_each_lattice_point(
        d, resolution,
        [&](std::span<const int> full) {
          for (int i = 0; i < d; ++i) points.push_back(static_cast<double>(full[i]) / resolution);
        },
        cap);
  } else {
    checked_power(resolution + 1, d, cap, "evaluation_grid");
    for_each_box_point(d, resolution + 1, [&](std::span<const int> k) {
      for (int i = 0; i < d; ++i) points.push_back(static_cast<double>(k[i]) / resolution);
    });
  }
  return points;
}

GridEvaluation evaluate_on_grid(const SampleSet& samples, const EstimatorConfig& config,
                                int resolution, std::uint64_t cap) {
  const int d = static_cast<int>(samples.dim());
  GridEvaluation out;
  out.dim = samples.dim();
  out.points = evaluation_grid(domain_of(config.kind), d, resolution, cap);
  const std::size_t count = out.points.size() / out.dim;
  out.values.reserve(count);
  auto point = [&](std::size_t i) {
    return std::span<const double>(out.points).subspan(i * out.dim, out.dim);
  };
  switch (config.kind) {
    case EstimatorKind::kSimplexCdf: {
      const BernsteinSimplexCdf estimator(samples, config.m, cap);
      for (std::size_t i = 0; i < count; ++i) {
        const auto p = point(i);
        out.values.push_back(estimator(SimplexPoint(std::vector<double>(p.begin(), p.end()))));
      }
      break;
    }
    case EstimatorKind::kHypercubeCdf: {
      const BernsteinHypercubeCdf estimator(samples, config.m, cap);
      for (std::size_t i = 0; i < count; ++i) out.values.push_back(estimator(point(i)));
      break;
    }
    case EstimatorKind::kHypercubeDensity: {
      const BernsteinHypercubeDensity estimator(samples, config.m, cap);
      for (std::size_t i = 0; i < count; ++i) out.values.push_back(estimator(point(i)));
      break;
    }
  }
  return out;
}

std::string grid_csv(const GridEvaluation& evaluation) {
  std::vector<std::string> fields(evaluation.dim + 1);
  for (std::size_t i = 0; i < evaluation.dim; ++i) fields[i] = "x" + std::to_string(i + 1);
  fields.back() = "value";
  std::string text = csv_row(fields);
  for (std::size_t p = 0; p < evaluation.values.size(); ++p) {
    for (std::size_t i = 0; i < evaluation.dim; ++i) {
      fields[i] = format_double(evaluation.points[p * evaluation.dim + i]);
    }
    fields.back() = format_double(evaluation.values[p]);
    text += csv_row(fields);
  }
  return text;
}

}  // namespace bsimplex
