#include "labelcor/simgen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <omp.h>

#include "labelcor/parallel.hpp"

namespace labelcor {

namespace {

constexpr std::uint64_t kFixedBetaStream = 0xBE7A5ULL;

void validate(const GwasConfig& cfg) {
  if (cfg.p < 100) throw std::invalid_argument("GWAS design needs p >= 100");
  if (cfg.n < 10) throw std::invalid_argument("GWAS design needs n >= 10");
  if (!(std::abs(cfg.rho) < 1.0)) throw std::invalid_argument("rho must lie in (-1, 1)");
}

}  // namespace

std::string_view to_string(ErrorDist e) noexcept {
  switch (e) {
    case ErrorDist::normal:
      return "normal";
    case ErrorDist::t1:
      return "t1";
    case ErrorDist::t2:
      return "t2";
  }
  return "unknown";
}

std::optional<ErrorDist> parse_error_dist(std::string_view name) {
  for (const auto e : {ErrorDist::normal, ErrorDist::t1, ErrorDist::t2}) {
    if (to_string(e) == name) return e;
  }
  return std::nullopt;
}

Matrix ar1_gaussian(std::size_t n, std::size_t p, double rho, Xoshiro256& rng) {
  if (!(std::abs(rho) < 1.0)) throw std::invalid_argument("rho must lie in (-1, 1)");
  const double innovation = std::sqrt(1.0 - rho * rho);
  Matrix x(n, p);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = x.row(i);
    double prev = rng.normal();
    row[0] = prev;
    for (std::size_t j = 1; j < p; ++j) {
      prev = rho * prev + innovation * rng.normal();
      row[j] = prev;
    }
  }
  return x;
}

Matrix ar1_gaussian(std::size_t n, std::size_t p, double rho, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  return ar1_gaussian(n, p, rho, rng);
}

std::vector<int> quartile_discretize(std::span<const double> column) {
  const std::size_t n = column.size();
  if (n < 4) throw std::invalid_argument("quartile_discretize needs at least 4 values");
  std::vector<double> sorted(column.begin(), column.end());
  std::sort(sorted.begin(), sorted.end());
  const double q1 = sorted[(n + 3) / 4 - 1];          // ceil(n/4)-th order statistic
  const double q3 = sorted[(3 * n + 3) / 4 - 1];      // ceil(3n/4)-th
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = column[i];
    out[i] = v < q1 ? 1 : (v < q3 ? 0 : -1);
  }
  return out;
}

std::vector<double> sample_t(int df, std::size_t n, Xoshiro256& rng) {
  if (df != 1 && df != 2) throw std::invalid_argument("sample_t supports df 1 and 2 only");
  std::vector<double> out(n);
  for (auto& v : out) {
    const double z = rng.normal();
    double chi2 = 0.0;
    for (int k = 0; k < df; ++k) {
      const double g = rng.normal();
      chi2 += g * g;
    }
    v = z / std::sqrt(chi2 / df);
  }
  return out;
}

std::vector<double> sample_t(int df, std::size_t n, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  return sample_t(df, n, rng);
}

std::array<double, 5> draw_gwas_betas(std::size_t n, Xoshiro256& rng) {
  const double nd = static_cast<double>(n);
  const double floor_value = 2.0 * std::log(nd) / std::sqrt(nd);
  std::array<double, 5> betas{};
  for (auto& b : betas) {
    const bool negative = rng.uniform() < 0.4;
    const double magnitude = floor_value + std::abs(rng.normal());
    b = negative ? -magnitude : magnitude;
  }
  return betas;
}

GwasSample gen_gwas(const GwasConfig& cfg) {
  validate(cfg);
  Xoshiro256 rng(cfg.seed);

  const Matrix latent = ar1_gaussian(cfg.n, cfg.p, cfg.rho, rng);
  GwasSample s;
  s.features = Matrix(cfg.n, cfg.p);
  for (std::size_t j = 0; j < cfg.p; ++j) {
    const auto codes = quartile_discretize(latent.column(j));
    for (std::size_t i = 0; i < cfg.n; ++i) s.features(i, j) = codes[i];
  }
  s.betas = cfg.betas ? *cfg.betas : draw_gwas_betas(cfg.n, rng);
  s.active.assign(kGwasActive.begin(), kGwasActive.end());

  std::vector<double> eps(cfg.n, 0.0);
  if (!cfg.zero_noise) {
    switch (cfg.error) {
      case ErrorDist::normal:
        for (auto& e : eps) e = rng.normal();
        break;
      case ErrorDist::t1:
        eps = sample_t(1, cfg.n, rng);
        break;
      case ErrorDist::t2:
        eps = sample_t(2, cfg.n, rng);
        break;
    }
  }

  const auto& b = s.betas;
  const auto& z = s.features;
  s.response.resize(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    s.response[i] = b[0] * z(i, 0) + b[1] * z(i, 1) + 2.0 * b[2] * z(i, 9) + 2.0 * b[3] * z(i, 19) -
                    2.0 * b[4] * std::abs(z(i, 99)) + eps[i];
  }
  return s;
}

std::map<Method, ScreeningReport> simulate_screening(const GwasConfig& cfg,
                                                     std::span<const Method> methods,
                                                     const SimulationOptions& options) {
  if (options.replications < 1) throw std::invalid_argument("need at least one replication");
  const std::size_t d = options.d == 0 ? default_cutoff(cfg.n) : options.d;

  GwasConfig base = cfg;
  if (options.fixed_betas && !base.betas) {
    auto rng = Xoshiro256::stream(cfg.seed, kFixedBetaStream);
    base.betas = draw_gwas_betas(cfg.n, rng);
  }

  const std::size_t reps = options.replications;
  std::vector<std::vector<FeatureRanking>> rankings(methods.size(),
                                                    std::vector<FeatureRanking>(reps));
  CorrelationOptions inner = options.correlation;
  inner.threads = 1;
  // Exceptions must not escape the parallel region.
  validate(base);

#pragma omp parallel for num_threads(resolve_threads(options.correlation.threads)) schedule(dynamic, 1)
  for (std::size_t r = 0; r < reps; ++r) {
    GwasConfig c = base;
    c.seed = derive_seed(cfg.seed, r);
    const GwasSample sample = gen_gwas(c);
    for (std::size_t m = 0; m < methods.size(); ++m) {
      rankings[m][r] = rank_categorical_features(sample.features, sample.response, methods[m], inner);
    }
  }

  std::map<Method, ScreeningReport> out;
  for (std::size_t m = 0; m < methods.size(); ++m) {
    out[methods[m]] = screening_metrics(rankings[m], kGwasActive, d);
  }
  return out;
}

}  // namespace labelcor
