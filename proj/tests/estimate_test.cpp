#include "bsimplex/estimate.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "bsimplex/errors.hpp"

namespace bsimplex {
namespace {

SampleSet two_points() { return SampleSet(2, {0.1, 0.2, 0.3, 0.4}, Domain::kSimplex); }

TEST(EmpiricalCdf, HandValues) {
  const auto samples = two_points();
  EXPECT_EQ(empirical_cdf(samples, std::vector<double>{0.3, 0.4}), 1.0);
  EXPECT_EQ(empirical_cdf(samples, std::vector<double>{0.2, 0.3}), 0.5);
  EXPECT_EQ(empirical_cdf(samples, std::vector<double>{0.05, 0.9}), 0.0);
}

TEST(EmpiricalCdf, Errors) {
  const SampleSet empty(2, {}, Domain::kSimplex);
  EXPECT_THROW(empirical_cdf(empty, std::vector<double>{0.1, 0.1}), DomainError);
  EXPECT_THROW(empirical_cdf(two_points(), std::vector<double>{0.1}), DimensionError);
}

TEST(BernsteinSimplex, SingleSampleHandValue) {
  const SampleSet samples(1, {0.5}, Domain::kSimplex);
  EXPECT_NEAR(bernstein_cdf_simplex(samples, 2, SimplexPoint({0.75})), 0.9375, 1e-13);
}

TEST(BernsteinSimplex, VertexExactness) {
  const auto samples = sample_dirichlet(std::vector<double>{1.0, 2.0, 0.5, 1.5}, 300, 21);
  const BernsteinSimplexCdf estimator(samples, 12);
  const std::vector<double> origin(3, 0.0);
  EXPECT_EQ(estimator(SimplexPoint(origin)), empirical_cdf(samples, origin));
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<double> vertex(3, 0.0);
    vertex[i] = 1.0;
    EXPECT_EQ(estimator(SimplexPoint(vertex)), empirical_cdf(samples, vertex)) << "vertex " << i;
  }
}

TEST(BernsteinSimplex, RangeAndMonotoneInOneDimension) {
  const auto samples = sample_dirichlet(std::vector<double>{0.7, 1.9}, 200, 4);
  const BernsteinSimplexCdf estimator(samples, 25);
  double previous = -1.0;
  for (int i = 0; i <= 200; ++i) {
    const double v = estimator(SimplexPoint({i / 200.0}));
    ASSERT_GE(v, 0.0);
    ASSERT_LE(v, 1.0);
    ASSERT_GE(v, previous - 1e-15);
    previous = v;
  }
}

TEST(BernsteinSimplex, ConvergesTowardEmpiricalCdf) {
  const auto samples = sample_dirichlet(std::vector<double>{1.0, 1.0, 1.0}, 2000, 2024);
  const auto grid = evaluation_grid(Domain::kSimplex, 2, 20);
  std::vector<double> reference;
  for (std::size_t i = 0; i < grid.size() / 2; ++i) {
    reference.push_back(empirical_cdf(samples, std::span<const double>(grid).subspan(2 * i, 2)));
  }
  auto error_at = [&](int m) {
    const auto evaluation = evaluate_on_grid(samples, {m, EstimatorKind::kSimplexCdf}, 20);
    return sup_error_on_grid(evaluation.values, reference);
  };
  EXPECT_LT(error_at(50), error_at(10));
}

TEST(BernsteinSimplex, WrongDomainRejected) {
  const SampleSet cube(1, {0.2}, Domain::kHypercube);
  EXPECT_THROW(BernsteinSimplexCdf(cube, 3), DomainError);
  EXPECT_THROW(BernsteinSimplexCdf(two_points(), 0), DomainError);
  EXPECT_THROW(BernsteinSimplexCdf(two_points(), 100, 100), CapacityError);
}

TEST(BernsteinHypercube, HandValues) {
  const SampleSet center(2, {0.5, 0.5}, Domain::kHypercube);
  // Only k = (1,1) has F_n = 1; its weight at (0.5, 0.5) is 1/4.
  EXPECT_NEAR(bernstein_cdf_hypercube(center, 1, std::vector<double>{0.5, 0.5}), 0.25, 1e-13);
  const auto samples = sample_uniform_hypercube(3, 100, 6);
  EXPECT_NEAR(bernstein_cdf_hypercube(samples, 8, std::vector<double>{1.0, 1.0, 1.0}), 1.0, 1e-13);
}

TEST(BernsteinHypercube, Range) {
  const auto samples = sample_uniform_hypercube(2, 150, 10);
  const BernsteinHypercubeCdf estimator(samples, 15);
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double v = estimator(std::vector<double>{i / 20.0, j / 20.0});
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0 + 1e-15);
    }
  }
  EXPECT_THROW(estimator(std::vector<double>{1.2, 0.3}), DomainError);
  EXPECT_THROW(estimator(std::vector<double>{0.3}), DimensionError);
}

TEST(BernsteinHypercube, CoincidesWithSimplexInOneDimension) {
  const auto cube = sample_uniform_hypercube(1, 500, 31);
  const auto simplex = cube.with_domain(Domain::kSimplex);
  for (int m : {1, 5, 40, 200}) {
    const BernsteinHypercubeCdf hyper(cube, m);
    const BernsteinSimplexCdf simp(simplex, m);
    for (int i = 0; i <= 100; ++i) {
      const double x = i / 100.0;
      ASSERT_NEAR(hyper(std::vector<double>{x}), simp(SimplexPoint({x})), 1e-12) << "m=" << m;
    }
  }
}

TEST(BernsteinDensity, SingleSampleHandValue) {
  const SampleSet one(1, {0.4}, Domain::kHypercube);
  // Cell (0, 1/2] carries the point, so f(x) = 2 (1 - x).
  for (double x : {0.0, 0.25, 0.6, 1.0}) {
    EXPECT_NEAR(bernstein_density_hypercube(one, 2, std::vector<double>{x}), 2.0 * (1.0 - x), 1e-13);
  }
  // The right end of a cell belongs to that cell.
  const SampleSet edge(1, {0.5}, Domain::kHypercube);
  EXPECT_NEAR(bernstein_density_hypercube(edge, 2, std::vector<double>{0.25}), 1.5, 1e-13);
}

TEST(BernsteinDensity, PointsAtZeroFallInNoCell) {
  const SampleSet zeros(2, {0.0, 0.3, 0.5, 0.0, 0.0, 0.0}, Domain::kHypercube);
  const BernsteinHypercubeDensity estimator(zeros, 4);
  for (double x : {0.0, 0.3, 1.0}) EXPECT_EQ(estimator(std::vector<double>{x, 0.5}), 0.0);
}

TEST(BernsteinDensity, UniformSampleNearOne) {
  const std::size_t n = 100'000;
  const int m = 10;
  const auto samples = sample_uniform_hypercube(1, n, 12345);
  const BernsteinHypercubeDensity estimator(samples, m);
  // Var f(x) = m^2 sum_k b_k(x)^2 p (1 - p) / n with p = 1/m.
  for (double x : {0.3, 0.5, 0.8}) {
    double sum_sq = 0.0;
    for (int k = 0; k < m; ++k) {
      const double b = std::exp(std::lgamma(m) - std::lgamma(k + 1.0) - std::lgamma(m - k) +
                                k * std::log(x) + (m - 1 - k) * std::log1p(-x));
      sum_sq += b * b;
    }
    const double sigma = std::sqrt(m * m * sum_sq * (1.0 / m) * (1.0 - 1.0 / m) / n);
    EXPECT_NEAR(estimator(std::vector<double>{x}), 1.0, 3.0 * sigma) << "x=" << x;
  }
}

TEST(BernsteinDensity, IntegratesToMassInsideCube) {
  const SampleSet samples(1, {0.0, 0.1, 0.35, 0.5, 0.99, 1.0}, Domain::kHypercube);
  const BernsteinHypercubeDensity estimator(samples, 7);
  const int cells = 20000;
  double integral = 0.0;
  for (int i = 0; i < cells; ++i) integral += estimator(std::vector<double>{(i + 0.5) / cells});
  integral /= cells;
  EXPECT_NEAR(integral, 5.0 / 6.0, 1e-8);
}

TEST(BernsteinDensity, Range) {
  const auto samples = sample_uniform_hypercube(2, 300, 2);
  const int m = 6;
  const BernsteinHypercubeDensity estimator(samples, m);
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      const double v = estimator(std::vector<double>{i / 10.0, j / 10.0});
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, m * m);
    }
  }
}

TEST(SupError, Basics) {
  const std::vector<double> a{0.1, 0.5, 0.9};
  const std::vector<double> b{0.35, 0.75, 1.15};
  EXPECT_EQ(sup_error_on_grid(a, a), 0.0);
  EXPECT_NEAR(sup_error_on_grid(a, b), 0.25, 1e-13);
  EXPECT_THROW(sup_error_on_grid(a, std::vector<double>{0.1}), DimensionError);
}

TEST(EstimatorKind, Parsing) {
  EXPECT_EQ(parse_estimator_kind("simplex-cdf"), EstimatorKind::kSimplexCdf);
  EXPECT_EQ(parse_estimator_kind("hypercube-cdf"), EstimatorKind::kHypercubeCdf);
  EXPECT_EQ(parse_estimator_kind("hypercube-density"), EstimatorKind::kHypercubeDensity);
  EXPECT_THROW(parse_estimator_kind("kernel"), DomainError);
  EXPECT_STREQ(to_string(EstimatorKind::kHypercubeCdf), "hypercube-cdf");
}

TEST(EvaluationGrid, Sizes) {
  EXPECT_EQ(evaluation_grid(Domain::kSimplex, 2, 20).size(), 2u * 231u);
  EXPECT_EQ(evaluation_grid(Domain::kHypercube, 2, 20).size(), 2u * 441u);
  EXPECT_THROW(evaluation_grid(Domain::kHypercube, 8, 100, 1000), CapacityError);
}

TEST(GridCsv, Layout) {
  const SampleSet samples(1, {0.5}, Domain::kSimplex);
  const auto evaluation = evaluate_on_grid(samples, {2, EstimatorKind::kSimplexCdf}, 4);
  const auto csv = grid_csv(evaluation);
  ASSERT_EQ(csv.rfind("x1,value\n", 0), 0u);
  std::istringstream in(csv.substr(9));
  const double expected[] = {0.0, 0.4375, 0.75, 0.9375, 1.0};
  std::string line;
  for (int i = 0; i <= 4; ++i) {
    ASSERT_TRUE(std::getline(in, line));
    const auto comma = line.find(',');
    EXPECT_DOUBLE_EQ(std::stod(line.substr(0, comma)), i / 4.0);
    EXPECT_NEAR(std::stod(line.substr(comma + 1)), expected[i], 1e-13);
  }
  EXPECT_FALSE(std::getline(in, line));
}

}  // namespace
}  // namespace bsimplex
