#include <gtest/gtest.h>

#include <cmath>

#include "labelcor/baselines.hpp"
#include "labelcor/method.hpp"
#include "labelcor/reference.hpp"
#include "test_support.hpp"

using namespace labelcor;
namespace ts = testing_support;

namespace {

double euclid(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

// Ratio of pooled vs class-weighted mean distances, by direct pair enumeration.
template <class Dist>
double oracle_ratio(const Dataset& d, Dist dist) {
  const std::size_t n = d.n();
  std::vector<double> nk(d.num_classes(), 0.0), within(d.num_classes(), 0.0);
  for (auto l : d.labels()) nk[l] += 1;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = dist(d.x().row(i), d.x().row(j));
      total += v;
      if (d.labels()[i] == d.labels()[j]) within[d.labels()[i]] += v;
    }
  }
  total /= double(n) * n;
  if (total <= 1e-12) return 0.0;
  double w = 0.0;
  for (std::size_t k = 0; k < nk.size(); ++k) w += (nk[k] / n) * within[k] / (nk[k] * nk[k]);
  return (total - w) / total;
}

double kernel_dist(std::span<const double> a, std::span<const double> b) {
  const double r = euclid(a, b);
  return std::sqrt(1.0 - std::exp(-r * r));
}

Dataset relabel(const Matrix& x, const Dataset& like) {
  return Dataset::build(x, std::vector<std::int64_t>(like.labels().begin(), like.labels().end()));
}

}  // namespace

TEST(GiniCor, MatchesPairOracle) {
  auto rng = Xoshiro256(1);
  for (int rep = 0; rep < 30; ++rep) {
    const auto d = ts::random_dataset(2 + rng.below(50), 1 + rng.below(4), 1 + rng.below(4), rng);
    EXPECT_NEAR(gini_cor(d), oracle_ratio(d, euclid), 1e-12);
    EXPECT_NEAR(gini_kernel_cor(d), oracle_ratio(d, kernel_dist), 1e-12);
    EXPECT_NEAR(gini_cor(d), reference::gini_cor(d), 1e-12);
    EXPECT_NEAR(gini_kernel_cor(d), reference::gini_kernel_cor(d), 1e-12);
  }
}

TEST(GiniCor, Examples) {
  const auto two = Dataset::build(Matrix::from_rows({{0}, {1}}), std::vector<std::string>{"a", "b"});
  EXPECT_EQ(gini_cor(two), 1.0);
  EXPECT_EQ(gini_kernel_cor(two), 1.0);
  for (std::size_t k : {2u, 3u}) {
    const auto d = ts::class_constant(k, 4, 3);
    EXPECT_EQ(gini_cor(d), 1.0);
    EXPECT_EQ(gini_kernel_cor(d), 1.0);
  }
  const auto same = Dataset::build(Matrix(5, 2, 1.5), std::vector<std::int64_t>{0, 1, 0, 1, 1});
  EXPECT_EQ(gini_cor(same), 0.0);
  EXPECT_EQ(gini_kernel_cor(same), 0.0);
}

TEST(GiniKernelCor, TwoPointClosedForm) {
  const double r = 0.7;
  const auto d = Dataset::build(Matrix::from_rows({{0, 0}, {r, 0}}), std::vector<std::string>{"a", "b"});
  const auto table = PairDistanceTable::compute(d.x(), PairMetric::gaussian_kernel);
  EXPECT_NEAR(table.distance(0, 1), std::sqrt(1 - std::exp(-r * r)), 1e-15);
  EXPECT_EQ(gini_kernel_cor(d), 1.0);
}

TEST(GiniKernelCor, RejectsNonPositiveBandwidth) {
  auto rng = Xoshiro256(2);
  const auto d = ts::random_dataset(10, 2, 2, rng);
  EXPECT_THROW(gini_kernel_cor(d, 0.0), std::invalid_argument);
  EXPECT_THROW(gini_kernel_cor(d, -1.0), std::invalid_argument);
}

TEST(Pearson, Examples) {
  const auto pm = Dataset::build(Matrix::from_rows({{1}, {-1}, {1}, {-1}}), std::vector<int64_t>{0, 1, 0, 1});
  EXPECT_NEAR(pearson_cat_cor(pm), 1.0, 1e-12);
  const auto flat = Dataset::build(Matrix::from_rows({{1, 5}, {2, 6}, {2, 6}, {1, 5}}),
                                   std::vector<int64_t>{0, 0, 1, 1});
  EXPECT_NEAR(pearson_cat_cor(flat), 0.0, 1e-15);
  EXPECT_EQ(pearson_cat_cor(Dataset::build(Matrix(3, 1, 2.0), std::vector<int64_t>{0, 1, 1})), 0.0);
}

TEST(Baselines, ZeroForSingleClass) {
  auto rng = Xoshiro256(3);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 2 + rng.below(40);
    const auto d = Dataset::build(ts::normal_matrix(n, 1 + rng.below(3), rng), std::vector<int64_t>(n, 0));
    for (const Method m : kAllMethods) EXPECT_EQ(correlate(d, m), 0.0) << to_string(m);
  }
}

TEST(Baselines, RangesOnRandomData) {
  auto rng = Xoshiro256(4);
  for (int rep = 0; rep < 100; ++rep) {
    const auto d = ts::random_dataset(2 + rng.below(40), 1 + rng.below(3), 1 + rng.below(4), rng);
    const double g = gini_cor(d), gk = gini_kernel_cor(d), pc = pearson_cat_cor(d);
    EXPECT_GE(g, -1e-9);
    EXPECT_LE(g, 1 + 1e-9);
    EXPECT_GE(gk, 0.0);
    EXPECT_LE(gk, 1 + 1e-9);
    EXPECT_GE(pc, 0.0);
    EXPECT_LE(pc, 1 + 1e-9);
  }
}

TEST(Baselines, RigidMotionInvariance) {
  auto rng = Xoshiro256(5);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t p = 1 + rng.below(4);
    const auto d = ts::random_dataset(30, p, 3, rng);
    std::vector<double> b(p);
    for (auto& v : b) v = 3.0 * rng.normal();
    const auto moved = relabel(ts::affine(d.x(), ts::random_orthogonal(p, rng), 1.0, b), d);
    EXPECT_NEAR(gini_cor(moved), gini_cor(d), 1e-9);
    EXPECT_NEAR(gini_kernel_cor(moved), gini_kernel_cor(d), 1e-9);
  }
}

TEST(Baselines, KernelCorDependsOnScale) {
  auto rng = Xoshiro256(6);
  const auto d = ts::random_dataset(40, 2, 2, rng);
  Matrix scaled = d.x();
  for (auto& v : scaled.data()) v *= 10.0;
  EXPECT_GT(std::abs(gini_kernel_cor(relabel(scaled, d)) - gini_kernel_cor(d)), 1e-3);
  EXPECT_NEAR(gini_cor(relabel(scaled, d)), gini_cor(d), 1e-9);
}

TEST(Pearson, ShiftAndScaleInvariance) {
  auto rng = Xoshiro256(7);
  const auto d = ts::random_dataset(50, 3, 3, rng);
  Matrix moved = d.x();
  for (std::size_t i = 0; i < moved.rows(); ++i)
    for (std::size_t j = 0; j < moved.cols(); ++j) moved(i, j) = 4.0 * (moved(i, j) + double(j) * 11.0);
  EXPECT_NEAR(pearson_cat_cor(relabel(moved, d)), pearson_cat_cor(d), 1e-9);
}

TEST(Baselines, ThreadCountDoesNotChangeResult) {
  auto rng = Xoshiro256(8);
  const auto d = ts::random_dataset(70, 3, 3, rng);
  EXPECT_EQ(gini_cor(d, 1), gini_cor(d, 4));
  EXPECT_EQ(gini_kernel_cor(d, 1.0, 1), gini_kernel_cor(d, 1.0, 4));
}
