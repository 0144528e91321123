#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "labelcor/dataset.hpp"
#include "labelcor/matrix.hpp"
#include "labelcor/method.hpp"

namespace labelcor {

/// Per-feature scores and their descending order (ties: lower index first).
/// Indices are 0-based.
struct FeatureRanking {
  Method method = Method::pcor;
  std::vector<double> scores;
  std::vector<std::size_t> order;

  /// 1-based rank of each feature.
  std::vector<std::size_t> ranks() const;
};

FeatureRanking rank_from_scores(Method method, std::vector<double> scores);

/// Features are categorical (e.g. SNP codes), the response is numeric: feature j
/// plays the label and the response the univariate numeric variable. A feature
/// with one observed category scores 0. Parallel over features.
FeatureRanking rank_categorical_features(const Matrix& codes, std::span<const double> response,
                                         Method method, const CorrelationOptions& options = {});

/// Features are numeric, the label is shared: column j of `d` is scored as a
/// univariate variable against d's labels. Parallel over features.
FeatureRanking rank_numeric_features(const Dataset& d, Method method,
                                     const CorrelationOptions& options = {});

/// First d features of the ranking. Throws std::invalid_argument unless 1 <= d <= p.
std::vector<std::size_t> top_d_select(const FeatureRanking& ranking, std::size_t d);

struct ScreeningReport {
  std::vector<std::size_t> active;  // 0-based
  std::size_t d = 0;
  std::size_t replications = 0;
  std::vector<double> p_each;       // per active feature: share of reps in the top d
  double p_all = 0.0;               // share of reps with every active feature in the top d
  double mms = 0.0;                 // median minimum model size
  double rsd = 0.0;                 // IQR / iqr_scale of minimum model size
  std::vector<std::size_t> min_model_sizes;
};

inline constexpr double kIqrToSd = 1.34898;

/// Minimum model size of one replication is the worst (largest) 1-based rank
/// over the active features. Quantiles interpolate linearly between order
/// statistics.
ScreeningReport screening_metrics(std::span<const FeatureRanking> rankings,
                                  std::span<const std::size_t> active, std::size_t d,
                                  double iqr_scale = kIqrToSd);

/// floor(n / log n), the conventional screening cutoff (37 at n = 200).
std::size_t default_cutoff(std::size_t n);

/// Linear-interpolation quantile (Hyndman-Fan type 7) of unsorted values.
double quantile(std::vector<double> values, double prob);

}  // namespace labelcor
