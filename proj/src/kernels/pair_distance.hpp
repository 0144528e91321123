#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "labelcor/baselines.hpp"

namespace labelcor::detail {

inline double pair_distance(const double* a, const double* b, std::size_t p, PairMetric metric,
                            double sigma2) noexcept {
  double sq = 0.0;
  for (std::size_t c = 0; c < p; ++c) sq += (a[c] - b[c]) * (a[c] - b[c]);
  if (metric == PairMetric::euclidean) return std::sqrt(sq);
  return std::sqrt(-std::expm1(-sq / sigma2));
}

/// Per-row sums of pair distances: over all j, and over j in row i's class.
/// Both sums run over ascending j.
struct RowDistanceSums {
  std::vector<double> total;
  std::vector<double> within;
};

RowDistanceSums row_distance_sums(const Matrix& x, std::span<const std::uint32_t> labels,
                                  PairMetric metric, double sigma2, int threads);

/// (T - W) / T with T = sum_i total_i / n^2 and W = sum_k (sum_{i in k} within_i / n_k) / n.
double gini_ratio(const RowDistanceSums& rows, const ClassPartition& partition);

}  // namespace labelcor::detail
