#include <cmath>
#include <vector>

#include <omp.h>

#include "labelcor/parallel.hpp"
#include "labelcor/pcor_multivariate.hpp"

namespace labelcor {

AnglePairTable AnglePairTable::compute(const Matrix& x, const PcorOptions& options) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  const int threads = resolve_threads(options.threads);

  AnglePairTable table;
  table.n_ = n;
  table.angle_sums_.assign(n * n, 0.0);
  table.both_zero_.assign(n * n, 0);

  const std::vector<std::uint8_t> eq = detail::equal_rows(x, options.tie_tolerance);
  for (const auto e : eq) table.equal_pairs_ += e;

  // inv_norm[j*n + l] = 1 / |x_j - x_l|, 0 where the difference counts as zero.
  std::vector<double> inv_norm(n * n, 0.0);
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::size_t j = 0; j < n; ++j) {
    const auto xj = x.row(j);
    for (std::size_t l = 0; l < n; ++l) {
      if (eq[j * n + l]) continue;
      const auto xl = x.row(l);
      double s = 0.0;
      for (std::size_t c = 0; c < p; ++c) s += (xj[c] - xl[c]) * (xj[c] - xl[c]);
      inv_norm[j * n + l] = 1.0 / std::sqrt(s);
    }
  }

  const double* xd = x.data().data();
#pragma omp parallel num_threads(threads)
  {
    std::vector<double> unit(n * p);  // (x_i - x_l) / |x_i - x_l| for the current i
#pragma omp for schedule(dynamic, 1)
    for (std::size_t i = 0; i < n; ++i) {
      const double* xi = xd + i * p;
      const std::uint8_t* eq_i = &eq[i * n];
      for (std::size_t l = 0; l < n; ++l) {
        const double inv = inv_norm[i * n + l];
        const double* xl = xd + l * p;
        for (std::size_t c = 0; c < p; ++c) unit[l * p + c] = (xi[c] - xl[c]) * inv;
      }
      for (std::size_t j = i; j < n; ++j) {
        const double* xj = xd + j * p;
        const std::uint8_t* eq_j = &eq[j * n];
        const double* inv_j = &inv_norm[j * n];
        double half_angles = 0.0;
        std::uint32_t both = 0;
        for (std::size_t l = 0; l < n; ++l) {
          if (eq_i[l] | eq_j[l]) {
            both += eq_i[l] & eq_j[l];
            continue;
          }
          const double* u = &unit[l * p];
          const double* xl = xd + l * p;
          double diff = 0.0, sum = 0.0;
          for (std::size_t c = 0; c < p; ++c) {
            const double v = (xj[c] - xl[c]) * inv_j[l];
            diff += (u[c] - v) * (u[c] - v);
            sum += (u[c] + v) * (u[c] + v);
          }
          half_angles += std::atan2(std::sqrt(diff), std::sqrt(sum));
        }
        const double angles = 2.0 * half_angles;
        table.angle_sums_[i * n + j] = angles;
        table.angle_sums_[j * n + i] = angles;
        table.both_zero_[i * n + j] = both;
        table.both_zero_[j * n + i] = both;
      }
    }
  }
  return table;
}

}  // namespace labelcor
