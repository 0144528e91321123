#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "labelcor/dataset.hpp"
#include "labelcor/matrix.hpp"

namespace labelcor {

struct PcorOptions {
  /// Rows whose coordinates all differ by at most this much count as equal
  /// (both for S3 and for the zero-difference conventions of the angle kernel).
  double tie_tolerance = 0.0;
  /// 0 = resolve_threads default.
  int threads = 0;
};

/// Angle at vertex `xl` between `xi - xl` and `xj - xl`, in [0, pi].
///
/// Conventions: 0 when exactly one difference is the zero vector, -pi when both
/// are. The angle is evaluated as 2*atan2(|u - v|, |u + v|) on the unit vectors,
/// which equals arccos(u.v) but stays accurate near 0 and pi and cannot produce
/// NaN.
double angle_kernel(std::span<const double> xi, std::span<const double> xj,
                    std::span<const double> xl, double tie_tolerance = 0.0);

struct PcorComponents {
  double s1_hat = 0.0;  // mean angle statistic (radians)
  double s2_hat = 0.0;  // class-restricted angle statistic (radians)
  double s3_hat = 0.0;  // fraction of equal ordered row pairs
  double pcor_hat = 0.0;
};

/// Denominators at or below this are treated as degenerate (correlation 0).
inline constexpr double kDegenerateDenominator = 1e-12;

/// Label-independent part of the multivariate estimator.
///
/// For every unordered pair (i, j) holds the sum over vertices l of the regular
/// angles a_ijl (both differences non-zero) and the number of vertices where
/// both differences vanish. Any labelling of the rows can then be scored in
/// O(n^2), which is what the permutation test relies on. Building the table is
/// the O(n^3 p) step and runs in parallel over rows; each entry is accumulated
/// in a fixed vertex order so the table is bit-identical for any thread count.
class AnglePairTable {
 public:
  static AnglePairTable compute(const Matrix& x, const PcorOptions& options = {});

  std::size_t n() const noexcept { return n_; }
  double angle_sum(std::size_t i, std::size_t j) const noexcept { return angle_sums_[i * n_ + j]; }
  std::uint32_t both_zero(std::size_t i, std::size_t j) const noexcept {
    return both_zero_[i * n_ + j];
  }
  /// Number of ordered pairs (i, j), diagonal included, with equal rows.
  std::int64_t equal_pairs() const noexcept { return equal_pairs_; }

  double s1() const;
  double s2(const ClassPartition& partition) const;
  double s3() const;
  PcorComponents components(const ClassPartition& partition) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> angle_sums_;
  std::vector<std::uint32_t> both_zero_;
  std::int64_t equal_pairs_ = 0;
};

double s1_hat(const Matrix& x, const PcorOptions& options = {});
double s2_hat(const Matrix& x, const ClassPartition& partition, const PcorOptions& options = {});
double s3_hat(const Matrix& x, const PcorOptions& options = {});

/// Multivariate label projection correlation, O(n^3 p). Intended for p >= 2;
/// for p = 1 prefer pcor_univariate (this still returns the V-statistic).
PcorComponents pcor_multivariate(const Dataset& d, const PcorOptions& options = {});

namespace detail {

/// (S1 - S2) / (S1 + pi S3), or 0 on a degenerate denominator.
double assemble_pcor(double s1, double s2, double s3) noexcept;

/// Row-equality flags (n x n, row-major) under the given tolerance.
std::vector<std::uint8_t> equal_rows(const Matrix& x, double tie_tolerance);

}  // namespace detail

}  // namespace labelcor
