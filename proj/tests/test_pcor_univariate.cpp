#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "labelcor/errors.hpp"
#include "labelcor/pcor_univariate.hpp"
#include "test_support.hpp"

using namespace labelcor;
namespace ts = testing_support;

namespace {

Dataset univariate(std::vector<double> x, std::vector<std::int64_t> y) {
  return Dataset::build(Matrix::column_vector(x), y);
}

// Plug-in mean differences by direct double loops over ordered pairs.
double oracle_pcor_1d(const Dataset& d) {
  const std::size_t n = d.n();
  const auto x = d.x().column(0);
  std::vector<double> q(n, 0.0), qb(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      q[i] += x[j] <= x[i];
      qb[i] += x[j] >= x[i];
    }
    q[i] /= n;
    qb[i] /= n;
  }
  std::vector<double> nk(d.num_classes(), 0.0);
  for (auto l : d.labels()) nk[l] += 1;
  double t1 = 0, t2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double diff = std::abs(q[i] - q[j]) + std::abs(qb[i] - qb[j]);
      t1 += diff / (double(n) * n);
      const auto li = d.labels()[i];
      if (li == d.labels()[j]) t2 += (nk[li] / n) * diff / (nk[li] * nk[li]);
    }
  }
  return t1 <= 1e-12 ? 0.0 : (t1 - t2) / t1;
}

Dataset random_1d(std::size_t n, std::size_t k, bool ties, Xoshiro256& rng) {
  const auto x = ties ? ts::tied_matrix(n, 1, 1 + rng.below(6), rng) : ts::normal_matrix(n, 1, rng);
  return Dataset::build(x, ts::random_labels(n, k, rng));
}

}  // namespace

TEST(EmpiricalCdf, Examples) {
  const std::vector<double> x{3, 1, 2};
  const auto e = empirical_cdf_values(x);
  EXPECT_EQ(e.q, (std::vector<double>{1.0, 1.0 / 3, 2.0 / 3}));
  EXPECT_EQ(e.q_bar, (std::vector<double>{1.0 / 3, 1.0, 2.0 / 3}));
  const std::vector<double> tie{5, 5};
  EXPECT_EQ(empirical_cdf_values(tie).q, (std::vector<double>{1, 1}));
  EXPECT_EQ(empirical_cdf_values(tie).q_bar, (std::vector<double>{1, 1}));
  const std::vector<double> one{7};
  EXPECT_EQ(empirical_cdf_values(one).q, (std::vector<double>{1}));
}

TEST(EmpiricalCdf, TieIdentity) {
  auto rng = Xoshiro256(1);
  const auto x = ts::tied_matrix(200, 1, 9, rng).column(0);
  const auto e = empirical_cdf_values(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto ties = std::count(x.begin(), x.end(), x[i]);
    EXPECT_NEAR(e.q[i] + e.q_bar[i], 1.0 + double(ties) / x.size(), 1e-15);
  }
}

TEST(GiniMeanDiff, Examples) {
  const std::vector<double> q{1.0 / 3, 2.0 / 3, 1.0};
  EXPECT_NEAR(gini_mean_diff_sorted(q, 2.0 / 9), 8.0 / 27, 1e-15);
  const std::vector<double> c(6, 0.4);
  EXPECT_EQ(gini_mean_diff_sorted(c, 1.0), 0.0);
  const std::vector<double> two{0, 1};
  EXPECT_EQ(gini_mean_diff_sorted(two, 0.5), 0.5);
}

TEST(GiniMeanDiff, MatchesDoubleLoop) {
  auto rng = Xoshiro256(2);
  for (int rep = 0; rep < 50; ++rep) {
    auto v = ts::normal_matrix(1 + rng.below(40), 1, rng).column(0);
    std::sort(v.begin(), v.end());
    double pairs = 0.0;
    for (double a : v)
      for (double b : v) pairs += std::abs(a - b);
    const double m = static_cast<double>(v.size());
    EXPECT_NEAR(gini_mean_diff_sorted(v, 2.0 / (m * m)), pairs / (m * m), 1e-12);
  }
}

TEST(Univariate, TieFreeDenominatorIdentity) {
  auto rng = Xoshiro256(3);
  for (std::size_t n : {3u, 10u, 57u, 200u}) {
    const auto c = pcor_univariate(random_1d(n, 2, false, rng));
    const double nn = static_cast<double>(n);
    EXPECT_NEAR(c.t1_hat, (nn * nn - 1) / (3 * nn * nn), 1e-15);
    EXPECT_EQ(c.t1_hat, c.t1bar_hat);
    EXPECT_NEAR(c.t1_hat + c.t1bar_hat, 2 * (nn * nn - 1) / (3 * nn * nn), 1e-12);
  }
}

TEST(Univariate, Endpoints) {
  auto rng = Xoshiro256(4);
  const auto x = ts::normal_matrix(50, 1, rng);
  EXPECT_EQ(pcor_univariate(Dataset::build(x, std::vector<std::int64_t>(50, 1))).pcor_hat, 0.0);
  EXPECT_EQ(pcor_univariate(univariate({0, 0, 1, 1, 0}, {0, 0, 1, 1, 0})).pcor_hat, 1.0);
  EXPECT_EQ(pcor_univariate(univariate({0, 1}, {0, 1})).pcor_hat, 1.0);
  EXPECT_EQ(pcor_univariate(univariate({2, 2, 2}, {0, 1, 0})).pcor_hat, 0.0);
}

TEST(Bruteforce, Examples) {
  EXPECT_EQ(pcor_univariate_bruteforce(univariate({0, 1}, {0, 1})), 1.0);
  auto rng = Xoshiro256(5);
  EXPECT_EQ(pcor_univariate_bruteforce(Dataset::build(ts::normal_matrix(12, 1, rng),
                                                      std::vector<std::int64_t>(12, 0))),
            0.0);
}

TEST(Univariate, FastMatchesBruteforceAndOracle) {
  auto rng = Xoshiro256(6);
  for (int rep = 0; rep < 200; ++rep) {
    const auto d = random_1d(2 + rng.below(59), 2 + rng.below(3), rep % 2 == 0, rng);
    const double fast = pcor_univariate(d).pcor_hat;
    EXPECT_NEAR(fast, pcor_univariate_bruteforce(d), 1e-10);
    EXPECT_NEAR(fast, oracle_pcor_1d(d), 1e-10);
    EXPECT_GE(fast, -1e-9);
    EXPECT_LE(fast, 1 + 1e-9);
  }
}

TEST(Univariate, StrictlyIncreasingTransformIsBitIdentical) {
  auto rng = Xoshiro256(7);
  for (int rep = 0; rep < 20; ++rep) {
    const auto d = random_1d(80, 3, rep % 2 == 0, rng);
    auto x = d.x().column(0);
    for (auto& v : x) v = std::exp(v) * 3.0 + std::atan(v) - 7.0;
    const auto moved = Dataset::build(Matrix::column_vector(x),
                                      std::vector<std::int64_t>(d.labels().begin(), d.labels().end()));
    EXPECT_EQ(pcor_univariate(moved).pcor_hat, pcor_univariate(d).pcor_hat);
  }
}

TEST(Univariate, PermutedLabelsConcentrateNearZero) {
  auto rng = Xoshiro256(8);
  double small_n = 0.0, large_n = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    small_n += pcor_univariate(random_1d(30, 2, false, rng)).pcor_hat / 50;
    large_n += pcor_univariate(random_1d(600, 2, false, rng)).pcor_hat / 50;
  }
  EXPECT_LT(large_n, small_n);
  EXPECT_LT(large_n, 0.01);
}

TEST(RankTable, ReusedAcrossLabellings) {
  auto rng = Xoshiro256(9);
  const auto d = random_1d(40, 2, true, rng);
  const auto table = RankCountTable::compute(d.x().column(0));
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<std::uint32_t> y(d.n());
    for (auto& l : y) l = static_cast<std::uint32_t>(rng.below(2));
    y[0] = 0, y[1] = 1;
    const auto e = d.with_labels(y);
    EXPECT_NEAR(table.pcor(class_partition(e)), pcor_univariate_bruteforce(e), 1e-10);
  }
}

TEST(Continuous, SingleClassClosedForm) {
  auto rng = Xoshiro256(10);
  for (std::size_t n : {5u, 40u, 300u}) {
    const auto d = Dataset::build(ts::normal_matrix(n, 1, rng), std::vector<std::int64_t>(n, 0));
    const double nn = static_cast<double>(n);
    EXPECT_NEAR(pcor_univariate_continuous(d), 4 * (1 - (nn + 1) * (2 * nn + 1) / (2 * nn * nn)),
                1e-12);
  }
}

TEST(Continuous, RefusesTiesUnlessAsked) {
  const auto d = univariate({1, 2, 2, 3}, {0, 1, 0, 1});
  EXPECT_THROW(pcor_univariate_continuous(d), DataError);
  EXPECT_NO_THROW(pcor_univariate_continuous(d, TieHandling::break_by_index));
}

TEST(Continuous, SeparatedClassesGiveOneHalf) {
  // Lower half vs upper half of a continuous sample: within-class Q spans an interval of
  // width 1/2, so T2 = 1/6 against T1 = 1/3 and both estimators tend to 1/2.
  auto rng = Xoshiro256(11);
  const std::size_t n = 4000;
  auto x = ts::normal_matrix(n, 1, rng).column(0);
  std::sort(x.begin(), x.end());
  std::vector<std::int64_t> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = i < n / 2 ? 0 : 1;
  const auto d = Dataset::build(Matrix::column_vector(x), y);
  EXPECT_NEAR(pcor_univariate_continuous(d), 0.5, 0.005);
  EXPECT_NEAR(pcor_univariate(d).pcor_hat, 0.5, 0.005);
}

TEST(Continuous, AgreesWithFastPathWithinTenOverNForTwoClasses) {
  auto rng = Xoshiro256(12);
  for (std::size_t n : {50u, 100u, 200u}) {
    for (int rep = 0; rep < 100; ++rep) {
      const auto d = random_1d(n, 2, false, rng);
      EXPECT_LE(std::abs(pcor_univariate_continuous(d) - pcor_univariate(d).pcor_hat), 10.0 / n);
    }
  }
}

TEST(Continuous, PlugInOffsetGrowsWithClassCount) {
  // Under independence the two plug-ins differ by about 3(K + 1)/n; at K = 1 this is exact.
  auto rng = Xoshiro256(13);
  for (std::size_t k : {3u, 4u}) {
    for (std::size_t n : {50u, 100u, 200u}) {
      for (int rep = 0; rep < 30; ++rep) {
        const auto d = random_1d(n, k, false, rng);
        const double scaled = n * (pcor_univariate(d).pcor_hat - pcor_univariate_continuous(d));
        EXPECT_NEAR(scaled, 3.0 * (k + 1), 1.5);
      }
    }
  }
}
