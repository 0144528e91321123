#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "labelcor/matrix.hpp"
#include "labelcor/method.hpp"
#include "labelcor/rng.hpp"
#include "labelcor/screening.hpp"

namespace labelcor {

enum class ErrorDist { normal, t1, t2 };

std::string_view to_string(ErrorDist e) noexcept;
std::optional<ErrorDist> parse_error_dist(std::string_view name);

/// Active SNPs of the GWAS design (1-based 1, 2, 10, 20, 100), 0-based.
inline constexpr std::array<std::size_t, 5> kGwasActive = {0, 1, 9, 19, 99};

struct GwasConfig {
  std::size_t n = 200;
  std::size_t p = 2000;
  double rho = 0.5;
  ErrorDist error = ErrorDist::normal;
  std::uint64_t seed = 1;
  bool zero_noise = false;                     // debug: epsilon = 0
  std::optional<std::array<double, 5>> betas;  // fixed coefficients instead of fresh draws
};

struct GwasSample {
  Matrix features;  // n x p, codes in {1, 0, -1}
  std::vector<double> response;
  std::vector<std::size_t> active;
  std::array<double, 5> betas{};
};

/// Rows i.i.d. N(0, Sigma) with Sigma_ij = rho^|i-j|, via the AR(1) recursion.
Matrix ar1_gaussian(std::size_t n, std::size_t p, double rho, Xoshiro256& rng);
Matrix ar1_gaussian(std::size_t n, std::size_t p, double rho, std::uint64_t seed);

/// 1 below the first quartile, 0 up to the third, -1 at or above it. Quartiles
/// are the order statistics at ceil(n/4) and ceil(3n/4). Requires n >= 4.
std::vector<int> quartile_discretize(std::span<const double> column);

/// Student t draws, normal / sqrt(chi2(df)/df). Only df 1 and 2 are supported.
std::vector<double> sample_t(int df, std::size_t n, Xoshiro256& rng);
std::vector<double> sample_t(int df, std::size_t n, std::uint64_t seed);

/// beta_i = (-1)^U (2 log(n)/sqrt(n) + |Z|), U ~ Bernoulli(0.4), Z ~ N(0, 1).
std::array<double, 5> draw_gwas_betas(std::size_t n, Xoshiro256& rng);

/// Y = b1 Z1 + b2 Z2 + 2 b3 Z10 + 2 b4 Z20 - 2 b5 |Z100| + eps.
/// Throws std::invalid_argument for p < 100, n < 10 or |rho| >= 1.
GwasSample gen_gwas(const GwasConfig& cfg);

struct SimulationOptions {
  std::size_t replications = 100;
  std::size_t d = 0;  // 0 = default_cutoff(n)
  bool fixed_betas = false;
  CorrelationOptions correlation;
};

/// Repeats the GWAS design and screens each replicate with every method.
/// Replicate r is generated from derive_seed(cfg.seed, r); parallel over
/// replicates, so results do not depend on the worker count.
std::map<Method, ScreeningReport> simulate_screening(const GwasConfig& cfg,
                                                     std::span<const Method> methods,
                                                     const SimulationOptions& options);

}  // namespace labelcor
