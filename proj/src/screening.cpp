#include "labelcor/screening.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <omp.h>

#include "labelcor/errors.hpp"
#include "labelcor/parallel.hpp"
#include "labelcor/pcor_univariate.hpp"

namespace labelcor {

namespace {

// Dense first-occurrence ids for one column of category codes.
std::pair<std::vector<std::uint32_t>, std::size_t> encode_codes(const Matrix& codes, std::size_t col) {
  std::unordered_map<double, std::uint32_t> ids;
  std::vector<std::uint32_t> labels(codes.rows());
  for (std::size_t i = 0; i < codes.rows(); ++i) {
    const double v = codes(i, col) == 0.0 ? 0.0 : codes(i, col);
    const auto [it, inserted] = ids.try_emplace(v, static_cast<std::uint32_t>(ids.size()));
    labels[i] = it->second;
  }
  return {std::move(labels), ids.size()};
}

}  // namespace

std::vector<std::size_t> FeatureRanking::ranks() const {
  std::vector<std::size_t> r(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) r[order[pos]] = pos + 1;
  return r;
}

FeatureRanking rank_from_scores(Method method, std::vector<double> scores) {
  for (std::size_t j = 0; j < scores.size(); ++j) {
    if (!std::isfinite(scores[j])) {
      throw std::invalid_argument("non-finite score for feature " + std::to_string(j));
    }
  }
  FeatureRanking r;
  r.method = method;
  r.order.resize(scores.size());
  std::iota(r.order.begin(), r.order.end(), std::size_t{0});
  std::sort(r.order.begin(), r.order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b] || (scores[a] == scores[b] && a < b);
  });
  r.scores = std::move(scores);
  return r;
}

FeatureRanking rank_categorical_features(const Matrix& codes, std::span<const double> response,
                                         Method method, const CorrelationOptions& options) {
  if (codes.rows() != response.size()) {
    throw std::invalid_argument("feature rows do not match the response length");
  }
  // Exceptions must not escape the parallel region below.
  for (const double v : response) {
    if (!std::isfinite(v)) throw DataError("non-finite response value");
  }
  for (const double v : codes.data()) {
    if (!std::isfinite(v)) throw DataError("non-finite feature code");
  }
  const std::size_t p = codes.cols();
  std::vector<double> scores(p, 0.0);
  const bool fast = method == Method::pcor && !options.force_bruteforce;
  const RankCountTable table = fast ? RankCountTable::compute(response) : RankCountTable{};
  const Matrix x = fast ? Matrix{} : Matrix::column_vector(response);
  CorrelationOptions inner = options;
  inner.threads = 1;

#pragma omp parallel for num_threads(resolve_threads(options.threads)) schedule(dynamic, 16)
  for (std::size_t j = 0; j < p; ++j) {
    auto [labels, k] = encode_codes(codes, j);
    if (k < 2) continue;
    if (fast) {
      scores[j] = table.pcor(ClassPartition::from_labels(labels, k));
    } else {
      const std::vector<double> col = codes.column(j);
      scores[j] = correlate(Dataset::build_from_codes(x, col), method, inner);
    }
  }
  return rank_from_scores(method, std::move(scores));
}

FeatureRanking rank_numeric_features(const Dataset& d, Method method,
                                     const CorrelationOptions& options) {
  const std::size_t p = d.p();
  const auto part = class_partition(d);
  const std::vector<std::int64_t> labels(d.labels().begin(), d.labels().end());
  std::vector<double> scores(p, 0.0);
  CorrelationOptions inner = options;
  inner.threads = 1;

#pragma omp parallel for num_threads(resolve_threads(options.threads)) schedule(dynamic, 16)
  for (std::size_t j = 0; j < p; ++j) {
    const std::vector<double> col = d.x().column(j);
    if (method == Method::pcor && !options.force_bruteforce) {
      scores[j] = RankCountTable::compute(col).pcor(part);
    } else {
      scores[j] = correlate(Dataset::build(Matrix::column_vector(col), labels), method, inner);
    }
  }
  return rank_from_scores(method, std::move(scores));
}

std::vector<std::size_t> top_d_select(const FeatureRanking& ranking, std::size_t d) {
  if (d < 1 || d > ranking.order.size()) {
    throw std::invalid_argument("cutoff d must lie in [1, " + std::to_string(ranking.order.size()) +
                                "], got " + std::to_string(d));
  }
  return {ranking.order.begin(), ranking.order.begin() + static_cast<std::ptrdiff_t>(d)};
}

double quantile(std::vector<double> values, double prob) {
  if (values.empty()) throw std::invalid_argument("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * prob;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

ScreeningReport screening_metrics(std::span<const FeatureRanking> rankings,
                                  std::span<const std::size_t> active, std::size_t d,
                                  double iqr_scale) {
  if (rankings.empty()) throw std::invalid_argument("screening_metrics needs at least one ranking");
  if (active.empty()) throw std::invalid_argument("active set is empty");
  const std::size_t p = rankings.front().order.size();
  if (d < 1 || d > p) throw std::invalid_argument("cutoff d out of range");
  for (const std::size_t a : active) {
    if (a >= p) throw std::invalid_argument("active feature index out of range");
  }

  ScreeningReport rep;
  rep.active.assign(active.begin(), active.end());
  rep.d = d;
  rep.replications = rankings.size();
  rep.p_each.assign(active.size(), 0.0);
  std::size_t all_hits = 0;
  std::vector<double> sizes;
  for (const auto& ranking : rankings) {
    if (ranking.order.size() != p) throw std::invalid_argument("rankings differ in feature count");
    const auto ranks = ranking.ranks();
    std::size_t worst = 0;
    bool all_in = true;
    for (std::size_t a = 0; a < active.size(); ++a) {
      const std::size_t r = ranks[active[a]];
      worst = std::max(worst, r);
      if (r <= d) {
        rep.p_each[a] += 1.0;
      } else {
        all_in = false;
      }
    }
    all_hits += all_in ? 1 : 0;
    rep.min_model_sizes.push_back(worst);
    sizes.push_back(static_cast<double>(worst));
  }
  const double reps = static_cast<double>(rankings.size());
  for (auto& v : rep.p_each) v /= reps;
  rep.p_all = static_cast<double>(all_hits) / reps;
  rep.mms = quantile(sizes, 0.5);
  rep.rsd = (quantile(sizes, 0.75) - quantile(sizes, 0.25)) / iqr_scale;
  return rep;
}

std::size_t default_cutoff(std::size_t n) {
  if (n < 3) return 1;
  const double nd = static_cast<double>(n);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(nd / std::log(nd))));
}

}  // namespace labelcor
