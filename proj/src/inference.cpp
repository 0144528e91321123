#include "labelcor/inference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <boost/math/distributions/normal.hpp>
#include <omp.h>

#include "labelcor/parallel.hpp"

namespace labelcor {

namespace {

constexpr std::size_t kMinPermutations = 99;
constexpr std::size_t kMinReplicates = 200;
constexpr std::size_t kReferenceFactor = 20;

// Relative slack when comparing permuted statistics with the observed one, so
// that mathematically equal values are not split by round-off.
constexpr double kTieSlack = 1e-12;

void shuffle(std::vector<std::uint32_t>& labels, Xoshiro256& rng) {
  for (std::size_t i = labels.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(labels[i - 1], labels[j]);
  }
}

bool every_class_constant(const Dataset& d) {
  const auto part = class_partition(d);
  const auto& x = d.x();
  for (const auto& cls : part.classes()) {
    const auto first = x.row(cls.indices.front());
    for (const std::size_t i : cls.indices) {
      const auto row = x.row(i);
      if (!std::equal(row.begin(), row.end(), first.begin())) return false;
    }
  }
  return true;
}

bool all_rows_equal(const Dataset& d) {
  const auto first = d.x().row(0);
  for (std::size_t i = 1; i < d.n(); ++i) {
    const auto row = d.x().row(i);
    if (!std::equal(row.begin(), row.end(), first.begin())) return false;
  }
  return true;
}

}  // namespace

PermTestResult permutation_test(const Dataset& d, Method method, std::size_t b, std::uint64_t seed,
                                const CorrelationOptions& options) {
  if (b < kMinPermutations) {
    throw std::invalid_argument("permutation test needs b >= 99, got " + std::to_string(b));
  }
  const PreparedStatistic stat(d, method, options);
  const double observed = stat.evaluate(class_partition(d));

  const std::vector<std::uint32_t> base(d.labels().begin(), d.labels().end());
  const std::size_t k = d.num_classes();
  std::vector<double> permuted(b);
#pragma omp parallel for num_threads(resolve_threads(options.threads)) schedule(dynamic, 4)
  for (std::size_t r = 0; r < b; ++r) {
    auto rng = Xoshiro256::stream(seed, r);
    auto labels = base;
    shuffle(labels, rng);
    permuted[r] = stat.evaluate(ClassPartition::from_labels(labels, k));
  }

  const double threshold = observed - kTieSlack * std::max(1.0, std::abs(observed));
  const auto exceed = std::count_if(permuted.begin(), permuted.end(),
                                    [&](double v) { return v >= threshold; });
  PermTestResult out;
  out.statistic = observed;
  out.pvalue = static_cast<double>(1 + exceed) / static_cast<double>(b + 1);
  out.b = b;
  out.seed = seed;
  return out;
}

AsymptoticsCheck mc_normality_check(Scenario scenario, const DatasetSampler& sampler,
                                    std::size_t n, std::size_t replicates, std::uint64_t seed,
                                    Method method, const CorrelationOptions& options) {
  if (replicates < kMinReplicates) {
    throw std::invalid_argument("asymptotics check needs at least 200 replicates");
  }
  {
    auto rng = Xoshiro256::stream(seed, 0);
    const Dataset pilot = sampler(n, rng);
    if (pilot.num_classes() > 1 && every_class_constant(pilot) && !all_rows_equal(pilot)) {
      throw std::invalid_argument(
          "degenerate sampler: every class is constant, so the estimator is identically 1");
    }
  }

  AsymptoticsCheck out;
  out.scenario = scenario;
  out.replicates = replicates;
  if (scenario == Scenario::dependent_normal) {
    auto rng = Xoshiro256::stream(seed, 1);
    out.reference = correlate(sampler(kReferenceFactor * n, rng), method, options);
  }

  const double scale = scenario == Scenario::dependent_normal
                           ? std::sqrt(static_cast<double>(n))
                           : static_cast<double>(n);
  CorrelationOptions inner = options;
  inner.threads = 1;
  out.standardized_samples.resize(replicates);
#pragma omp parallel for num_threads(resolve_threads(options.threads)) schedule(dynamic, 4)
  for (std::size_t r = 0; r < replicates; ++r) {
    auto rng = Xoshiro256::stream(seed, r + 2);
    const double est = correlate(sampler(n, rng), method, inner);
    out.standardized_samples[r] = scale * (est - out.reference);
  }

  const auto [lo, hi] =
      std::minmax_element(out.standardized_samples.begin(), out.standardized_samples.end());
  if (*lo == *hi) throw std::invalid_argument("estimator is constant across replicates");
  return out;
}

DatasetSampler two_class_normal_sampler(double shift, std::size_t p) {
  return [shift, p](std::size_t n, Xoshiro256& rng) {
    Matrix x(n, p);
    std::vector<std::int64_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = rng.uniform() < 0.5 ? 0 : 1;
      for (std::size_t c = 0; c < p; ++c) {
        x(i, c) = rng.normal() + (labels[i] == 1 ? shift : 0.0);
      }
    }
    return Dataset::build(std::move(x), labels);
  };
}

double qq_normal_correlation(std::span<const double> samples) {
  std::vector<double> s(samples.begin(), samples.end());
  std::sort(s.begin(), s.end());
  const double m = static_cast<double>(s.size());
  const boost::math::normal standard;
  std::vector<double> q(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    q[i] = boost::math::quantile(standard, (static_cast<double>(i + 1) - 0.375) / (m + 0.25));
  }
  double ms = 0.0, mq = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    ms += s[i];
    mq += q[i];
  }
  ms /= m;
  mq /= m;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    sxy += (s[i] - ms) * (q[i] - mq);
    sxx += (s[i] - ms) * (s[i] - ms);
    syy += (q[i] - mq) * (q[i] - mq);
  }
  if (sxx == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

double sample_skewness(std::span<const double> samples) {
  const double m = static_cast<double>(samples.size());
  if (samples.size() < 3) throw std::invalid_argument("skewness needs at least 3 samples");
  double mean = 0.0;
  for (const double v : samples) mean += v;
  mean /= m;
  double m2 = 0.0, m3 = 0.0;
  for (const double v : samples) {
    const double c = v - mean;
    m2 += c * c;
    m3 += c * c * c;
  }
  m2 /= m;
  m3 /= m;
  if (m2 == 0.0) return 0.0;
  const double g1 = m3 / std::pow(m2, 1.5);
  return g1 * std::sqrt(m * (m - 1.0)) / (m - 2.0);
}

double ks_uniform_distance(std::span<const double> samples) {
  std::vector<double> s(samples.begin(), samples.end());
  std::sort(s.begin(), s.end());
  const double m = static_cast<double>(s.size());
  double dist = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double u = std::clamp(s[i], 0.0, 1.0);
    dist = std::max({dist, static_cast<double>(i + 1) / m - u, u - static_cast<double>(i) / m});
  }
  return dist;
}

}  // namespace labelcor
