#include "labelcor/pcor_multivariate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace labelcor {

namespace detail {

double assemble_pcor(double s1, double s2, double s3) noexcept {
  const double denom = s1 + std::numbers::pi * s3;
  if (std::abs(denom) <= kDegenerateDenominator) return 0.0;
  return (s1 - s2) / denom;
}

std::vector<std::uint8_t> equal_rows(const Matrix& x, double tie_tolerance) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  std::vector<std::uint8_t> eq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    eq[i * n + i] = 1;
    const auto xi = x.row(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto xj = x.row(j);
      bool same = true;
      for (std::size_t c = 0; c < p && same; ++c) same = std::abs(xi[c] - xj[c]) <= tie_tolerance;
      eq[i * n + j] = eq[j * n + i] = same ? 1 : 0;
    }
  }
  return eq;
}

}  // namespace detail

// S2 with class-weighted sums. S1 is the single-class case of the same
// arithmetic, which makes S1 == S2 bit-for-bit when K = 1, and the angle and
// both-zero parts are kept apart so class-constant data give S2 == -pi S3
// exactly. Both properties pin the estimator's endpoints at exactly 0 and 1.
double AnglePairTable::s2(const ClassPartition& partition) const {
  if (partition.n() != n_) throw std::invalid_argument("partition size does not match the table");
  double angle_weighted = 0.0;
  double zero_weighted = 0.0;
  for (const auto& cls : partition.classes()) {
    double angles = 0.0;
    std::int64_t zeros = 0;
    for (const std::size_t i : cls.indices) {
      double row = 0.0;
      const double* g = &angle_sums_[i * n_];
      const std::uint32_t* z = &both_zero_[i * n_];
      for (const std::size_t j : cls.indices) {
        row += g[j];
        zeros += z[j];
      }
      angles += row;
    }
    const double nk = static_cast<double>(cls.size());
    angle_weighted += angles / nk;
    zero_weighted += static_cast<double>(zeros) / nk;
  }
  const double nn = static_cast<double>(n_) * static_cast<double>(n_);
  return angle_weighted / nn - std::numbers::pi * (zero_weighted / nn);
}

double AnglePairTable::s1() const { return s2(ClassPartition::single(n_)); }

double AnglePairTable::s3() const {
  const double nn = static_cast<double>(n_) * static_cast<double>(n_);
  return static_cast<double>(equal_pairs_) / nn;
}

PcorComponents AnglePairTable::components(const ClassPartition& partition) const {
  PcorComponents out;
  out.s1_hat = s1();
  out.s2_hat = s2(partition);
  out.s3_hat = s3();
  out.pcor_hat = detail::assemble_pcor(out.s1_hat, out.s2_hat, out.s3_hat);
  return out;
}

double s1_hat(const Matrix& x, const PcorOptions& options) {
  return AnglePairTable::compute(x, options).s1();
}

double s2_hat(const Matrix& x, const ClassPartition& partition, const PcorOptions& options) {
  return AnglePairTable::compute(x, options).s2(partition);
}

double s3_hat(const Matrix& x, const PcorOptions& options) {
  const auto eq = detail::equal_rows(x, options.tie_tolerance);
  std::int64_t count = 0;
  for (const auto e : eq) count += e;
  const double n = static_cast<double>(x.rows());
  return static_cast<double>(count) / (n * n);
}

PcorComponents pcor_multivariate(const Dataset& d, const PcorOptions& options) {
  return AnglePairTable::compute(d.x(), options).components(class_partition(d));
}

}  // namespace labelcor
