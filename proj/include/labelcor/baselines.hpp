#pragma once

#include <cstddef>
#include <vector>

#include "labelcor/dataset.hpp"
#include "labelcor/matrix.hpp"
#include "labelcor/method.hpp"

namespace labelcor {

struct BaselineScore {
  Method method;  // gcor, gkcor or pearson
  double value = 0.0;
};

/// Gini distance correlation, plug-in V-statistic over all ordered pairs. O(n^2 p).
double gini_cor(const Dataset& d, int threads = 0);

/// RKHS Gini correlation with the Gaussian kernel k(x,y) = exp(-|x-y|^2/sigma2)/2,
/// i.e. d(x,y) = sqrt(1 - exp(-|x-y|^2/sigma2)). Throws std::invalid_argument
/// when sigma2 <= 0.
double gini_kernel_cor(const Dataset& d, double sigma2 = 1.0, int threads = 0);

/// Categorical Pearson correlation: between-class over total variance summed
/// over dimensions, divisor-n moments. 0 when the total variance vanishes.
double pearson_cat_cor(const Dataset& d);

BaselineScore baseline_score(const Dataset& d, Method m, double sigma2 = 1.0, int threads = 0);

enum class PairMetric { euclidean, gaussian_kernel };

/// Pairwise distance matrix for repeated Gini-type scoring of relabellings.
class PairDistanceTable {
 public:
  static PairDistanceTable compute(const Matrix& x, PairMetric metric, double sigma2 = 1.0,
                                   int threads = 0);

  std::size_t n() const noexcept { return n_; }
  double distance(std::size_t i, std::size_t j) const noexcept { return d_[i * n_ + j]; }
  /// (overall mean distance - class-weighted within mean) / overall mean.
  double ratio(const ClassPartition& partition) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

}  // namespace labelcor
