#include <stdexcept>

#include <omp.h>

#include "labelcor/parallel.hpp"
#include "labelcor/pcor_multivariate.hpp"
#include "pair_distance.hpp"

namespace labelcor {

namespace detail {

RowDistanceSums row_distance_sums(const Matrix& x, std::span<const std::uint32_t> labels,
                                  PairMetric metric, double sigma2, int threads) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  const double* xd = x.data().data();
  RowDistanceSums rows{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
#pragma omp parallel for num_threads(resolve_threads(threads)) schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    double total = 0.0, within = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double dist = pair_distance(xd + i * p, xd + j * p, p, metric, sigma2);
      total += dist;
      if (labels[j] == labels[i]) within += dist;
    }
    rows.total[i] = total;
    rows.within[i] = within;
  }
  return rows;
}

// K = 1 makes within == total row by row and the two reductions identical, so
// the ratio is exactly 0; class-constant data make every within sum exactly 0.
double gini_ratio(const RowDistanceSums& rows, const ClassPartition& partition) {
  const double n = static_cast<double>(rows.total.size());
  double total = 0.0;
  for (const double t : rows.total) total += t;
  const double overall = total / n / n;
  if (overall <= kDegenerateDenominator) return 0.0;

  double weighted = 0.0;
  for (const auto& cls : partition.classes()) {
    double s = 0.0;
    for (const std::size_t i : cls.indices) s += rows.within[i];
    weighted += s / static_cast<double>(cls.size());
  }
  const double within = weighted / n;
  return (overall - within) / overall;
}

}  // namespace detail

PairDistanceTable PairDistanceTable::compute(const Matrix& x, PairMetric metric, double sigma2,
                                             int threads) {
  if (metric == PairMetric::gaussian_kernel && !(sigma2 > 0.0)) {
    throw std::invalid_argument("sigma2 must be positive");
  }
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  const double* xd = x.data().data();
  PairDistanceTable table;
  table.n_ = n;
  table.d_.assign(n * n, 0.0);
#pragma omp parallel for num_threads(resolve_threads(threads)) schedule(dynamic, 8)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dist = detail::pair_distance(xd + i * p, xd + j * p, p, metric, sigma2);
      table.d_[i * n + j] = dist;
      table.d_[j * n + i] = dist;
    }
  }
  return table;
}

double PairDistanceTable::ratio(const ClassPartition& partition) const {
  if (partition.n() != n_) throw std::invalid_argument("partition size does not match the table");
  detail::RowDistanceSums rows{std::vector<double>(n_, 0.0), std::vector<double>(n_, 0.0)};
  for (const auto& cls : partition.classes()) {
    for (const std::size_t i : cls.indices) {
      const double* row = &d_[i * n_];
      double within = 0.0;
      for (const std::size_t j : cls.indices) within += row[j];
      rows.within[i] = within;
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    const double* row = &d_[i * n_];
    double total = 0.0;
    for (std::size_t j = 0; j < n_; ++j) total += row[j];
    rows.total[i] = total;
  }
  return detail::gini_ratio(rows, partition);
}

}  // namespace labelcor
