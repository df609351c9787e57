#include "bsimplex/spoly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "bsimplex/csv.hpp"
#include "bsimplex/summation.hpp"

namespace bsimplex {

namespace mp = boost::multiprecision;

namespace {

constexpr double kSingularFloor = 1e-14;

void require_interior(const SimplexPoint& x, const char* what) {
  for (double v : x.barycentric()) {
    if (v <= kSingularFloor) {
      throw SingularityError(std::string(what) +
                             ": point is on or too close to the simplex boundary");
    }
  }
}

void require_rs(int r, int s) {
  if (r < 1 || s < 1) throw DomainError("r and s must be positive integers");
}

double log_scale(int r, int s) {
  return std::log(static_cast<double>(r) * s * (r + s));
}

}  // namespace

void SPolyParams::validate() const {
  require_rs(r, s);
  if (m < 1) throw DomainError("S polynomial: degree m must be at least 1");
  if (d < 1) throw DomainError("S polynomial: dimension d must be at least 1");
}

namespace {

std::size_t evaluator_table_size(const SPolyParams& p) {
  p.validate();
  return static_cast<std::size_t>(std::max(p.r, p.s)) * p.m;
}

}  // namespace

SPolyEvaluator::SPolyEvaluator(const SPolyParams& p, std::uint64_t cap)
    : p_(p), log_factorial_(evaluator_table_size(p)) {
  check_lattice_capacity(p.d, p.m, cap);
}

double SPolyEvaluator::operator()(const SimplexPoint& x) const {
  if (x.dim() != static_cast<std::size_t>(p_.d)) {
    throw DimensionError("s_eval: point dimension differs from d");
  }
  return (*this)(x.coords());
}

double SPolyEvaluator::operator()(std::span<const double> coords) const {
  const int d = p_.d;
  std::vector<double> log_x(static_cast<std::size_t>(d) + 1);
  double used = 0.0;
  for (int i = 0; i < d; ++i) {
    log_x[i] = coords[i] > 0.0 ? std::log(coords[i]) : -std::numeric_limits<double>::infinity();
    used += coords[i];
  }
  const double last = std::max(0.0, 1.0 - used);
  log_x[d] = last > 0.0 ? std::log(last) : -std::numeric_limits<double>::infinity();

  const int r = p_.r;
  const int s = p_.s;
  const double head = log_factorial_(static_cast<std::size_t>(r) * p_.m) +
                      log_factorial_(static_cast<std::size_t>(s) * p_.m);
  PairwiseSum total;
  for_each_lattice_point(
      d, p_.m,
      [&](std::span<const int> full) {
        double value = head;
        for (std::size_t i = 0; i < full.size(); ++i) {
          const int k = full[i];
          if (k == 0) continue;
          if (std::isinf(log_x[i])) return;
          value += (r + s) * k * log_x[i] - log_factorial_(static_cast<std::size_t>(r) * k) -
                   log_factorial_(static_cast<std::size_t>(s) * k);
        }
        total.add(std::exp(value));
      },
      std::numeric_limits<std::uint64_t>::max());
  return total.result();
}

double s_eval(const SPolyParams& p, const SimplexPoint& x, std::uint64_t cap) {
  return SPolyEvaluator(p, cap)(x);
}

double phi_eval(int r, int s, const SimplexPoint& x) {
  require_rs(r, s);
  require_interior(x, "phi_eval");
  const double d = static_cast<double>(x.dim());
  double log_det = d * log_scale(r, s);
  for (double v : x.barycentric()) log_det += std::log(v);
  const double g = std::gcd(r, s);
  return std::exp(d * std::log(g) - 0.5 * d * std::log(2.0 * std::numbers::pi) - 0.5 * log_det);
}

double DetCovariance::relative_gap() const {
  return std::fabs(closed_form - dense) / std::fabs(closed_form);
}

DetCovariance det_covariance(int r, int s, const SimplexPoint& x) {
  require_rs(r, s);
  require_interior(x, "det_covariance");
  const auto d = static_cast<Eigen::Index>(x.dim());
  const double scale = static_cast<double>(r) * s * (r + s);

  double closed = std::pow(scale, static_cast<double>(d));
  for (double v : x.barycentric()) closed *= v;

  Eigen::MatrixXd sigma(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      sigma(i, j) = scale * ((i == j ? x[i] : 0.0) - x[i] * x[j]);
    }
  }
  return {closed, sigma.determinant()};
}

CentralBinomialReport central_binomial_identity(int d, int m, const ExactBudget& budget) {
  if (d < 1 || m < 0) throw DomainError("central_binomial_identity: need d >= 1 and m >= 0");
  if (d > budget.max_d || m > budget.max_m) {
    throw CapacityError("central_binomial_identity: (d=" + std::to_string(d) + ", m=" +
                        std::to_string(m) + ") exceeds the exact-arithmetic budget (d <= " +
                        std::to_string(budget.max_d) + ", m <= " + std::to_string(budget.max_m) +
                        ")");
  }
  using Wide = mp::checked_uint256_t;
  // C(2j, j) = C(2j-2, j-1) * 2(2j-1) / j
  std::vector<Wide> central(static_cast<std::size_t>(m) + 1);
  central[0] = 1;
  for (int j = 1; j <= m; ++j) central[j] = central[j - 1] * (2 * (2 * j - 1)) / j;

  Wide sum = 0;
  for_each_lattice_point(d, m, [&](std::span<const int> full) {
    Wide product = 1;
    for (int k : full) product *= central[k];
    sum += product;
  });

  CentralBinomialReport report;
  report.d = d;
  report.m = m;
  report.lhs = mp::cpp_int(sum);
  mp::cpp_rational rhs = mp::cpp_rational(mp::pow(mp::cpp_int(4), static_cast<unsigned>(m)));
  for (int j = 1; j <= m; ++j) rhs *= mp::cpp_rational(d - 1 + 2 * j, 2 * j);
  report.rhs = rhs;
  report.equal = mp::denominator(rhs) == 1 && mp::numerator(rhs) == report.lhs;
  return report;
}

double s_integral_exact(const SPolyParams& p, std::uint64_t cap) {
  p.validate();
  check_lattice_capacity(p.d, p.m, cap);
  const auto rs = static_cast<std::size_t>(p.r + p.s);
  const LogFactorialTable lf(rs * p.m + p.d);
  const double head = lf(static_cast<std::size_t>(p.r) * p.m) +
                      lf(static_cast<std::size_t>(p.s) * p.m) - lf(rs * p.m + p.d);
  PairwiseSum total;
  for_each_lattice_point(
      p.d, p.m,
      [&](std::span<const int> full) {
        double value = head;
        for (int k : full) {
          if (k == 0) continue;
          const auto kk = static_cast<std::size_t>(k);
          value += lf(rs * kk) - lf(p.r * kk) - lf(p.s * kk);
        }
        total.add(std::exp(value));
      },
      cap);
  return total.result();
}

double s_integral_closed_form(int d, int m) {
  if (d < 1 || m < 1) throw DomainError("s_integral_closed_form: need d, m >= 1");
  const double half_d = 0.5 * d;
  return std::exp(-d * std::numbers::ln2 + 0.5 * std::log(std::numbers::pi) + log_gamma(m + 1.0) -
                  log_gamma(half_d + 0.5) - log_gamma(m + half_d + 1.0));
}

double asymptotic_constant(int d) {
  if (d < 1) throw DomainError("asymptotic_constant: d must be at least 1");
  return std::exp(-d * std::numbers::ln2 + 0.5 * std::log(std::numbers::pi) -
                  log_gamma(0.5 * d + 0.5));
}

double s_integral_limit(int r, int s, int d) {
  require_rs(r, s);
  const double ratio = 2.0 / (static_cast<double>(r) * s * (r + s));
  return asymptotic_constant(d) * std::pow(ratio, 0.5 * d);
}

TestFunction TestFunction::parse(const std::string& id) {
  if (id == "zero") return zero();
  if (id == "one") return one();
  if (id == "half") return half_simplex();
  if (id.size() >= 2 && id[0] == 'x') {
    const auto second = id.find('x', 1);
    try {
      if (second == std::string::npos) {
        const int i = std::stoi(id.substr(1));
        if (i >= 1) return coordinate(i - 1);
      } else {
        const int i = std::stoi(id.substr(1, second - 1));
        const int j = std::stoi(id.substr(second + 1));
        if (i >= 1 && j >= 1) return product(i - 1, j - 1);
      }
    } catch (const std::exception&) {
    }
  }
  throw DomainError("unknown test function '" + id + "'");
}

double TestFunction::operator()(std::span<const double> x) const {
  switch (kind_) {
    case Kind::kZero: return 0.0;
    case Kind::kOne: return 1.0;
    case Kind::kCoordinate: return x[i_];
    case Kind::kProduct: return x[i_] * x[j_];
    case Kind::kHalfSimplex: {
      double total = 0.0;
      for (double v : x) total += v;
      return total <= 0.5 ? 1.0 : 0.0;
    }
  }
  return 0.0;
}

bool TestFunction::fits(int d) const {
  return std::max(i_, j_) < d;
}

std::string TestFunction::name() const {
  switch (kind_) {
    case Kind::kZero: return "zero";
    case Kind::kOne: return "one";
    case Kind::kCoordinate: return "x" + std::to_string(i_ + 1);
    case Kind::kProduct: return "x" + std::to_string(i_ + 1) + "x" + std::to_string(j_ + 1);
    case Kind::kHalfSimplex: return "half";
  }
  return "unknown";
}

int default_resolution(int d) { return d == 1 ? 200 : 120; }

double weighted_integral_experiment(const SPolyParams& p, const TestFunction& h, int resolution,
                                    std::uint64_t cap) {
  p.validate();
  if (resolution < 2) throw DomainError("weighted_integral_experiment: resolution must be >= 2");
  if (!h.fits(p.d)) {
    throw DomainError("weighted_integral_experiment: test function " + h.name() +
                      " needs more than " + std::to_string(p.d) + " coordinates");
  }
  // Cells i in N_0^d with sum(i_j + 1/2)/res <= 1 - 1/(2 res).
  const double bound = resolution - 0.5 - 0.5 * p.d;
  if (bound < 0.0) return 0.0;
  const int lattice_degree = static_cast<int>(std::floor(bound + 1e-12));
  check_lattice_capacity(p.d, lattice_degree, cap);

  const SPolyEvaluator s_poly(p, cap);
  const double scale = std::pow(static_cast<double>(p.m), 0.5 * p.d);
  const double cell_volume = std::pow(1.0 / resolution, p.d);
  std::vector<double> mid(static_cast<std::size_t>(p.d));
  PairwiseSum total;
  for_each_lattice_point(p.d, lattice_degree, [&](std::span<const int> full) {
    for (int i = 0; i < p.d; ++i) mid[i] = (full[i] + 0.5) / resolution;
    const double weight = h(mid);
    if (weight == 0.0) {
      total.add(0.0);
      return;
    }
    const SimplexPoint x(mid);
    total.add(weight * (scale * s_poly(x) - phi_eval(p.r, p.s, x)));
  });
  return total.result() * cell_volume;
}

double gamma_ratio_residual(double m) {
  if (!(m >= 1.0) || !std::isfinite(m)) throw DomainError("gamma_ratio_residual: need m >= 1");
  // ln[Gamma(m+1)/(sqrt(m) Gamma(m+1/2))] with the Stirling main parts
  // combined analytically.
  const double log_ratio = (m + 0.5) * std::log1p(1.0 / m) - m * std::log1p(0.5 / m) - 0.5 +
                           log_gamma_remainder(m + 1.0) - log_gamma_remainder(m + 0.5);
  const double excess = std::expm1(log_ratio) - 1.0 / (8.0 * m);
  return m * m * std::fabs(excess);
}

std::vector<ConvergenceRow> s_convergence_table(int d, int r, int s, std::span<const int> m_list,
                                                std::uint64_t cap) {
  std::vector<ConvergenceRow> rows;
  const double limit = s_integral_limit(r, s, d);
  for (int m : m_list) {
    const SPolyParams p{r, s, m, d};
    const double value = std::pow(static_cast<double>(m), 0.5 * d) * s_integral_exact(p, cap);
    rows.push_back({d, r, s, m, value, limit, m * std::fabs(value - limit)});
  }
  return rows;
}

std::string convergence_csv(std::span<const ConvergenceRow> rows, bool with_header) {
  std::string text;
  if (with_header) text += "d,r,s,m,value,limit,scaled_error\n";
  for (const auto& row : rows) {
    text += csv_row({std::to_string(row.d), std::to_string(row.r), std::to_string(row.s),
                     std::to_string(row.m), format_double(row.value), format_double(row.limit),
                     format_double(row.scaled_error)});
  }
  return text;
}

std::vector<LcltRow> lclt_compare(int r, int s, const SimplexPoint& x, std::span<const int> m_list,
                                  std::uint64_t cap) {
  const int d = static_cast<int>(x.dim());
  const double phi = phi_eval(r, s, x);
  std::vector<LcltRow> rows;
  for (int m : m_list) {
    const double scaled = std::pow(static_cast<double>(m), 0.5 * d) * s_eval({r, s, m, d}, x, cap);
    rows.push_back({d, r, s, m, scaled, phi, std::fabs(scaled - phi)});
  }
  return rows;
}

std::string lclt_csv(std::span<const LcltRow> rows, bool with_header) {
  std::string text;
  if (with_header) text += "d,r,s,m,scaled_s,phi,abs_error\n";
  for (const auto& row : rows) {
    text += csv_row({std::to_string(row.d), std::to_string(row.r), std::to_string(row.s),
                     std::to_string(row.m), format_double(row.scaled_s), format_double(row.phi),
                     format_double(row.abs_error)});
  }
  return text;
}

SimplexPoint barycenter(int d) {
  if (d < 1) throw DomainError("barycenter: d must be at least 1");
  const std::vector<double> bary(static_cast<std::size_t>(d) + 1, 1.0 / (d + 1));
  std::vector<double> coords(bary.begin(), bary.end() - 1);
  return SimplexPoint(std::move(coords));
}

}  // namespace bsimplex
