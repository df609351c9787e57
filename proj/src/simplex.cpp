#include "bsimplex/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "bsimplex/rng.hpp"
#include "bsimplex/summation.hpp"

namespace bsimplex {

namespace {

constexpr double kSimplexTolerance = 1e-12;

}  // namespace

SimplexPoint::SimplexPoint(std::vector<double> coords) {
  if (coords.empty()) throw DomainError("SimplexPoint: dimension must be at least 1");
  double total = 0.0;
  for (double v : coords) {
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("SimplexPoint: coordinates must be finite and nonnegative");
    }
    total += v;
  }
  if (total > 1.0 + kSimplexTolerance) {
    throw DomainError("SimplexPoint: coordinate sum exceeds 1");
  }
  bary_ = std::move(coords);
  bary_.push_back(std::max(0.0, 1.0 - total));
}

SimplexPoint SimplexPoint::from_barycentric(std::span<const double> bary) {
  if (bary.size() < 2) throw DomainError("SimplexPoint: need at least two barycentric coordinates");
  double total = 0.0;
  for (double v : bary) {
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("SimplexPoint: coordinates must be finite and nonnegative");
    }
    total += v;
  }
  if (std::fabs(total - 1.0) > kSimplexTolerance) {
    throw DomainError("SimplexPoint: barycentric coordinates must sum to 1");
  }
  SimplexPoint p;
  p.bary_.assign(bary.begin(), bary.end());
  return p;
}

bool SimplexPoint::interior() const {
  return std::all_of(bary_.begin(), bary_.end(), [](double v) { return v > 0.0; });
}

MultiIndex::MultiIndex(std::vector<int> k, int m) : full_(std::move(k)), m_(m) {
  if (full_.empty()) throw DomainError("MultiIndex: dimension must be at least 1");
  if (m < 0) throw DomainError("MultiIndex: degree must be nonnegative");
  long long total = 0;
  for (int v : full_) {
    if (v < 0) throw DomainError("MultiIndex: entries must be nonnegative");
    total += v;
  }
  if (total > m) throw DomainError("MultiIndex: |k| exceeds the degree");
  full_.push_back(m - static_cast<int>(total));
}

WeightVector::WeightVector(std::vector<double> gamma) : gamma_(std::move(gamma)) {
  if (gamma_.size() < 2) throw DomainError("WeightVector: need at least two weights");
  for (double g : gamma_) {
    if (!std::isfinite(g) || g < 0.0) throw DomainError("WeightVector: weights must be >= 0");
    mass_ += g;
  }
  if (!(mass_ > 0.0)) throw DomainError("WeightVector: total mass must be positive");
}

WeightVector WeightVector::from_partial(std::vector<double> gamma_d, double total_mass) {
  if (!(total_mass > 0.0) || !std::isfinite(total_mass)) {
    throw DomainError("WeightVector: total mass must be positive");
  }
  double used = 0.0;
  for (double g : gamma_d) {
    if (!std::isfinite(g) || g < 0.0) throw DomainError("WeightVector: weights must be >= 0");
    used += g;
  }
  double last = total_mass - used;
  if (last < -kSimplexTolerance * total_mass) {
    throw DomainError("WeightVector: partial weights exceed the total mass");
  }
  gamma_d.push_back(std::max(0.0, last));
  WeightVector w;
  w.gamma_ = std::move(gamma_d);
  w.mass_ = total_mass;
  return w;
}

std::size_t WeightVector::effective_size() const {
  return static_cast<std::size_t>(
      std::count_if(gamma_.begin(), gamma_.end(), [](double g) { return g > 0.0; }));
}

std::uint64_t lattice_size(int d, int m) {
  if (d < 1 || m < 0) throw DomainError("lattice_size: need d >= 1 and m >= 0");
  // C(m+i, i) = C(m+i-1, i-1) * (m+i) / i, exact at every step.
  boost::multiprecision::uint128_t c = 1;
  const boost::multiprecision::uint128_t limit = std::numeric_limits<std::uint64_t>::max();
  for (int i = 1; i <= d; ++i) {
    c = c * static_cast<unsigned>(m + i) / static_cast<unsigned>(i);
    if (c > limit) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

void check_lattice_capacity(int d, int m, std::uint64_t cap) {
  const std::uint64_t size = lattice_size(d, m);
  if (size > cap) {
    std::ostringstream msg;
    msg << "lattice with d=" << d << ", m=" << m << " has " << size
        << " points, above the cap of " << cap;
    throw CapacityError(msg.str());
  }
}

std::vector<MultiIndex> enumerate_lattice(int d, int m, std::uint64_t cap) {
  check_lattice_capacity(d, m, cap);
  std::vector<MultiIndex> out;
  out.reserve(lattice_size(d, m));
  for_each_lattice_point(
      d, m,
      [&](std::span<const int> full) {
        out.emplace_back(std::vector<int>(full.begin(), full.end() - 1), m);
      },
      cap);
  return out;
}

MultinomialKernel::MultinomialKernel(int m, const SimplexPoint& x)
    : m_(m), log_factorial_(static_cast<std::size_t>(std::max(m, 0))), log_x_(x.dim() + 1) {
  if (m < 0) throw DomainError("MultinomialKernel: degree must be nonnegative");
  for (std::size_t i = 0; i <= x.dim(); ++i) {
    log_x_[i] = x[i] > 0.0 ? std::log(x[i]) : -std::numeric_limits<double>::infinity();
  }
}

double MultinomialKernel::log_pmf(std::span<const int> full) const {
  if (full.size() != log_x_.size()) {
    throw DimensionError("multinomial pmf: index and point dimensions differ");
  }
  double value = log_factorial_(static_cast<std::size_t>(m_));
  for (std::size_t i = 0; i < full.size(); ++i) {
    const int k = full[i];
    if (k == 0) continue;
    if (std::isinf(log_x_[i])) return -std::numeric_limits<double>::infinity();
    value += k * log_x_[i] - log_factorial_(static_cast<std::size_t>(k));
  }
  return value;
}

double multinomial_log_pmf(const MultiIndex& k, const SimplexPoint& x) {
  if (k.dim() != x.dim()) {
    throw DimensionError("multinomial_log_pmf: index has dimension " + std::to_string(k.dim()) +
                         " but the point has dimension " + std::to_string(x.dim()));
  }
  return MultinomialKernel(k.degree(), x).log_pmf(k.full());
}

double pmf_normalization_check(int d, int m, const SimplexPoint& x, std::uint64_t cap) {
  if (static_cast<std::size_t>(d) != x.dim()) {
    throw DimensionError("pmf_normalization_check: point dimension differs from d");
  }
  const MultinomialKernel kernel(m, x);
  PairwiseSum total;
  for_each_lattice_point(
      d, m, [&](std::span<const int> full) { total.add(std::exp(kernel.log_pmf(full))); }, cap);
  return total.result();
}

SampleSet sample_dirichlet(std::span<const double> alpha, std::size_t n, std::uint64_t seed) {
  if (alpha.size() < 2) throw DomainError("sample_dirichlet: need at least two parameters");
  for (double a : alpha) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw DomainError("sample_dirichlet: parameters must be positive");
    }
  }
  if (n == 0) throw DomainError("sample_dirichlet: sample size must be at least 1");
  const std::size_t d = alpha.size() - 1;
  Rng rng(seed);
  std::vector<double> flat;
  flat.reserve(n * d);
  for (std::size_t j = 0; j < n; ++j) {
    const auto draw = rng.dirichlet(alpha);
    flat.insert(flat.end(), draw.begin(), draw.begin() + static_cast<std::ptrdiff_t>(d));
  }
  std::ostringstream prov;
  prov << "dirichlet(";
  for (std::size_t i = 0; i < alpha.size(); ++i) prov << (i ? "," : "") << alpha[i];
  prov << ") n=" << n << " seed=" << seed;
  return SampleSet(d, std::move(flat), Domain::kSimplex, prov.str());
}

SampleSet sample_uniform_hypercube(std::size_t d, std::size_t n, std::uint64_t seed) {
  if (d == 0 || n == 0) throw DomainError("sample_uniform_hypercube: need d >= 1 and n >= 1");
  Rng rng(seed);
  std::vector<double> flat(n * d);
  for (double& v : flat) v = rng.uniform();
  return SampleSet(d, std::move(flat), Domain::kHypercube,
                   "uniform hypercube d=" + std::to_string(d) + " n=" + std::to_string(n) +
                       " seed=" + std::to_string(seed));
}

}  // namespace bsimplex
