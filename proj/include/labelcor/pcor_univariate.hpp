#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "labelcor/dataset.hpp"

namespace labelcor {

struct EmpiricalCdf {
  std::vector<double> q;      // #{j : x_j <= x_i} / n
  std::vector<double> q_bar;  // #{j : x_j >= x_i} / n
};

/// Empirical CDF values in both directions (ties count on both sides). One sort.
EmpiricalCdf empirical_cdf_values(std::span<const double> x);

/// scale * sum_i (2i - m - 1) v_(i) for ascending v (i is 1-based). With
/// scale = 2/m^2 this is the plug-in estimate of E|V1 - V2|.
double gini_mean_diff_sorted(std::span<const double> v, double scale);

struct Fast1dComponents {
  std::vector<double> q;
  std::vector<double> q_bar;
  double t1_hat = 0.0;
  double t2_hat = 0.0;
  double t1bar_hat = 0.0;
  double t2bar_hat = 0.0;
  double pcor_hat = 0.0;
};

/// Label-independent rank counts of a univariate sample.
///
/// Holds the integer counts n*Q_i and n*Qbar_i. Scoring a labelling only needs
/// per-class sorts, so one table serves every feature partition in screening and
/// every relabelling in the permutation test. Integer arithmetic keeps the
/// endpoint identities (K = 1 gives 0, class-constant gives 1) exact.
class RankCountTable {
 public:
  /// n <= 2'000'000 (weighted rank sums must fit in 64 bits).
  static RankCountTable compute(std::span<const double> x);

  std::size_t n() const noexcept { return le_.size(); }
  std::span<const std::int64_t> count_le() const noexcept { return le_; }
  std::span<const std::int64_t> count_ge() const noexcept { return ge_; }

  /// T statistics and correlation; q / q_bar vectors are left empty.
  Fast1dComponents components(const ClassPartition& partition) const;
  double pcor(const ClassPartition& partition) const { return components(partition).pcor_hat; }

 private:
  std::vector<std::int64_t> le_;
  std::vector<std::int64_t> ge_;
  std::int64_t t1_sum_ = 0;     // sum (2i - n - 1) le_(i)
  std::int64_t t1bar_sum_ = 0;  // same for ge
};

/// O(n log n) univariate label projection correlation. Requires p = 1.
Fast1dComponents pcor_univariate(const Dataset& d);

/// Direct O(n^3) evaluation through the indicator kernels c_ijl, d_ijl and pair
/// weights w_ij. Test oracle for pcor_univariate. Requires p = 1.
double pcor_univariate_bruteforce(const Dataset& d);

enum class TieHandling { refuse, break_by_index };

/// Rank shortcut for continuous data, 4(1 - 3 sum_k p_k E[Q F_k]). Throws
/// DataError on tied x unless ties are broken by sample index. Requires p = 1.
double pcor_univariate_continuous(const Dataset& d, TieHandling ties = TieHandling::refuse);

}  // namespace labelcor
