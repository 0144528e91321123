#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "labelcor/dataset.hpp"
#include "labelcor/method.hpp"
#include "labelcor/rng.hpp"

namespace labelcor {

struct PermTestResult {
  double statistic = 0.0;
  double pvalue = 1.0;  // (1 + #{permuted >= observed}) / (b + 1)
  std::size_t b = 0;
  std::uint64_t seed = 0;
};

/// Label-permutation independence test.
///
/// Replicate r shuffles the labels (preserving class counts) with the stream
/// (seed, r), so the p-value depends only on (data, method, b, seed) and not on
/// the worker count. Throws std::invalid_argument when b < 99.
PermTestResult permutation_test(const Dataset& d, Method method, std::size_t b, std::uint64_t seed,
                                const CorrelationOptions& options = {});

enum class Scenario { dependent_normal, independent_null };

struct AsymptoticsCheck {
  Scenario scenario = Scenario::dependent_normal;
  std::size_t replicates = 0;
  double reference = 0.0;  // population value the samples are centred on
  std::vector<double> standardized_samples;
};

using DatasetSampler = std::function<Dataset(std::size_t n, Xoshiro256& rng)>;

/// Monte Carlo draws of the scaled estimation error.
///
/// dependent_normal: sqrt(n) (estimate - reference), reference from one run at
/// n_ref = 20 n. independent_null: n * estimate (the population value is 0).
/// Throws std::invalid_argument for replicates < 200 and when the sampler is
/// degenerate (every class constant, so the estimator is identically 1).
AsymptoticsCheck mc_normality_check(Scenario scenario, const DatasetSampler& sampler,
                                    std::size_t n, std::size_t replicates, std::uint64_t seed,
                                    Method method = Method::pcor,
                                    const CorrelationOptions& options = {});

/// Two equiprobable classes, X | class b shifted by `shift` in every coordinate.
DatasetSampler two_class_normal_sampler(double shift, std::size_t p = 1);

/// Correlation between sorted samples and standard normal quantiles at Blom
/// plotting positions (i - 3/8) / (m + 1/4).
double qq_normal_correlation(std::span<const double> samples);
/// Adjusted Fisher-Pearson sample skewness.
double sample_skewness(std::span<const double> samples);
/// Kolmogorov-Smirnov distance between the empirical CDF and Uniform(0, 1).
double ks_uniform_distance(std::span<const double> samples);

}  // namespace labelcor
