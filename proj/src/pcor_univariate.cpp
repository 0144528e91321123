#include "labelcor/pcor_univariate.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "labelcor/errors.hpp"
#include "labelcor/pcor_multivariate.hpp"

namespace labelcor {

namespace {

constexpr std::size_t kMaxRankSample = 2'000'000;

void require_univariate(const Dataset& d) {
  if (d.p() != 1) {
    throw std::invalid_argument("univariate estimator needs p = 1, got p = " +
                                std::to_string(d.p()));
  }
}

std::vector<std::size_t> sorted_order(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  return order;
}

// Sorts in place, then sum_i (2i - m - 1) v_(i) with 1-based i.
std::int64_t rank_weighted_sum(std::vector<std::int64_t>& v) {
  std::sort(v.begin(), v.end());
  const auto m = static_cast<std::int64_t>(v.size());
  std::int64_t s = 0;
  for (std::int64_t i = 0; i < m; ++i) s += (2 * (i + 1) - m - 1) * v[static_cast<std::size_t>(i)];
  return s;
}

// 2 / n^2 * sum_k S_k / n_k; T1 is the single-class case of the same arithmetic.
struct GiniAccumulator {
  double weighted = 0.0;
  void add(std::int64_t rank_sum, std::size_t class_size) {
    weighted += static_cast<double>(rank_sum) / static_cast<double>(class_size);
  }
  double value(std::size_t n) const {
    const double nn = static_cast<double>(n) * static_cast<double>(n);
    return 2.0 * weighted / nn;
  }
};

}  // namespace

EmpiricalCdf empirical_cdf_values(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("empirical_cdf_values: empty sample");
  const auto table = RankCountTable::compute(x);
  const double n = static_cast<double>(x.size());
  EmpiricalCdf out;
  out.q.resize(x.size());
  out.q_bar.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.q[i] = static_cast<double>(table.count_le()[i]) / n;
    out.q_bar[i] = static_cast<double>(table.count_ge()[i]) / n;
  }
  return out;
}

double gini_mean_diff_sorted(std::span<const double> v, double scale) {
  assert(std::is_sorted(v.begin(), v.end()) && "gini_mean_diff_sorted needs ascending input");
  const auto m = static_cast<double>(v.size());
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (2.0 * static_cast<double>(i + 1) - m - 1.0) * v[i];
  }
  return scale * s;
}

RankCountTable RankCountTable::compute(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n > kMaxRankSample) {
    throw std::invalid_argument("rank table supports at most 2,000,000 samples");
  }
  RankCountTable t;
  t.le_.resize(n);
  t.ge_.resize(n);
  const auto order = sorted_order(x);
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && x[order[end]] == x[order[start]]) ++end;
    for (std::size_t k = start; k < end; ++k) {
      t.le_[order[k]] = static_cast<std::int64_t>(end);
      t.ge_[order[k]] = static_cast<std::int64_t>(n - start);
    }
    start = end;
  }
  auto le = t.le_;
  auto ge = t.ge_;
  t.t1_sum_ = rank_weighted_sum(le);
  t.t1bar_sum_ = rank_weighted_sum(ge);
  return t;
}

Fast1dComponents RankCountTable::components(const ClassPartition& partition) const {
  const std::size_t n = le_.size();
  if (partition.n() != n) throw std::invalid_argument("partition size does not match the sample");

  GiniAccumulator t1, t1bar, t2, t2bar;
  t1.add(t1_sum_, n);
  t1bar.add(t1bar_sum_, n);

  std::vector<std::int64_t> buf;
  for (const auto& cls : partition.classes()) {
    buf.resize(cls.size());
    for (std::size_t m = 0; m < cls.size(); ++m) buf[m] = le_[cls.indices[m]];
    t2.add(rank_weighted_sum(buf), cls.size());
    for (std::size_t m = 0; m < cls.size(); ++m) buf[m] = ge_[cls.indices[m]];
    t2bar.add(rank_weighted_sum(buf), cls.size());
  }

  Fast1dComponents out;
  out.t1_hat = t1.value(n);
  out.t1bar_hat = t1bar.value(n);
  out.t2_hat = t2.value(n);
  out.t2bar_hat = t2bar.value(n);
  const double denom = out.t1_hat + out.t1bar_hat;
  out.pcor_hat =
      denom <= kDegenerateDenominator ? 0.0 : (denom - (out.t2_hat + out.t2bar_hat)) / denom;
  return out;
}

Fast1dComponents pcor_univariate(const Dataset& d) {
  require_univariate(d);
  const auto& x = d.x();
  const auto table = RankCountTable::compute(x.data());
  auto out = table.components(class_partition(d));
  const double n = static_cast<double>(d.n());
  out.q.resize(d.n());
  out.q_bar.resize(d.n());
  for (std::size_t i = 0; i < d.n(); ++i) {
    out.q[i] = static_cast<double>(table.count_le()[i]) / n;
    out.q_bar[i] = static_cast<double>(table.count_ge()[i]) / n;
  }
  return out;
}

double pcor_univariate_bruteforce(const Dataset& d) {
  require_univariate(d);
  const std::size_t n = d.n();
  const auto x = d.x().data();
  const auto y = d.labels();
  const auto part = class_partition(d);

  double numerator = 0.0;
  std::int64_t denominator = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // w_ij = 1 - sum_k I(Y_i = Y_j = k) / p_k
      double w = 1.0;
      if (y[i] == y[j]) {
        w -= static_cast<double>(n) / static_cast<double>(part.classes()[y[i]].size());
      }
      std::int64_t cd = 0;
      for (std::size_t l = 0; l < n; ++l) {
        cd += std::abs(static_cast<int>(x[l] <= x[i]) - static_cast<int>(x[l] <= x[j]));
        cd += std::abs(static_cast<int>(x[l] >= x[i]) - static_cast<int>(x[l] >= x[j]));
      }
      numerator += w * static_cast<double>(cd);
      denominator += cd;
    }
  }
  if (denominator == 0) return 0.0;
  return numerator / static_cast<double>(denominator);
}

double pcor_univariate_continuous(const Dataset& d, TieHandling ties) {
  require_univariate(d);
  const std::size_t n = d.n();
  const auto x = d.x().data();
  const auto order = sorted_order(x);
  if (ties == TieHandling::refuse) {
    for (std::size_t k = 1; k < n; ++k) {
      if (x[order[k]] == x[order[k - 1]]) {
        throw DataError("ties present: the continuous shortcut needs distinct values");
      }
    }
  }
  // Ordinal ranks; with break_by_index, tied values are ordered by sample index.
  std::vector<std::int64_t> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[order[k]] = static_cast<std::int64_t>(k + 1);

  const auto part = class_partition(d);
  std::vector<std::size_t> members;
  double expectation = 0.0;  // sum_k p_k E[Q F_k]
  for (const auto& cls : part.classes()) {
    members = cls.indices;
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
    std::int64_t inner = 0;
    for (std::size_t m = 0; m < members.size(); ++m) {
      inner += rank[members[m]] * static_cast<std::int64_t>(m + 1);
    }
    const double nn = static_cast<double>(n) * static_cast<double>(n);
    expectation += static_cast<double>(inner) / (nn * static_cast<double>(cls.size()));
  }
  return 4.0 * (1.0 - 3.0 * expectation);
}

}  // namespace labelcor
