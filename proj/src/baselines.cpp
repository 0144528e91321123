#include "labelcor/baselines.hpp"

#include <stdexcept>

#include "kernels/pair_distance.hpp"

namespace labelcor {

double gini_cor(const Dataset& d, int threads) {
  const auto rows =
      detail::row_distance_sums(d.x(), d.labels(), PairMetric::euclidean, 1.0, threads);
  return detail::gini_ratio(rows, class_partition(d));
}

double gini_kernel_cor(const Dataset& d, double sigma2, int threads) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be positive");
  const auto rows =
      detail::row_distance_sums(d.x(), d.labels(), PairMetric::gaussian_kernel, sigma2, threads);
  return detail::gini_ratio(rows, class_partition(d));
}

// Between-class variance is taken in the centred form sum_k p_k (mu_k - mu)^2,
// equal to sum_k p_k mu_k^2 - mu^2 but never negative after rounding.
double pearson_cat_cor(const Dataset& d) {
  const auto part = class_partition(d);
  const auto& x = d.x();
  const double n = static_cast<double>(d.n());
  double between = 0.0;
  double total = 0.0;
  for (std::size_t c = 0; c < d.p(); ++c) {
    double sum = 0.0;
    for (std::size_t i = 0; i < d.n(); ++i) sum += x(i, c);
    const double mean = sum / n;
    double ss = 0.0;
    for (std::size_t i = 0; i < d.n(); ++i) ss += (x(i, c) - mean) * (x(i, c) - mean);
    total += ss / n;
    for (const auto& cls : part.classes()) {
      double s = 0.0;
      for (const std::size_t i : cls.indices) s += x(i, c);
      const double diff = s / static_cast<double>(cls.size()) - mean;
      between += cls.frequency * diff * diff;
    }
  }
  if (total <= 0.0) return 0.0;
  return between / total;
}

BaselineScore baseline_score(const Dataset& d, Method m, double sigma2, int threads) {
  switch (m) {
    case Method::gcor:
      return {m, gini_cor(d, threads)};
    case Method::gkcor:
      return {m, gini_kernel_cor(d, sigma2, threads)};
    case Method::pearson:
      return {m, pearson_cat_cor(d)};
    case Method::pcor:
      break;
  }
  throw std::invalid_argument("pcor is not a baseline method");
}

}  // namespace labelcor
