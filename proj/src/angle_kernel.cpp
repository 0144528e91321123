#include <cmath>
#include <numbers>
#include <stdexcept>

#include "labelcor/pcor_multivariate.hpp"

namespace labelcor {

namespace {

bool is_zero_difference(std::span<const double> a, std::span<const double> b, double tol) {
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (std::abs(a[c] - b[c]) > tol) return false;
  }
  return true;
}

}  // namespace

double angle_kernel(std::span<const double> xi, std::span<const double> xj,
                    std::span<const double> xl, double tie_tolerance) {
  if (xi.size() != xl.size() || xj.size() != xl.size()) {
    throw std::invalid_argument("angle_kernel: points differ in dimension");
  }
  const bool zi = is_zero_difference(xi, xl, tie_tolerance);
  const bool zj = is_zero_difference(xj, xl, tie_tolerance);
  if (zi && zj) return -std::numbers::pi;
  if (zi || zj) return 0.0;

  double ni = 0.0, nj = 0.0;
  for (std::size_t c = 0; c < xl.size(); ++c) {
    const double u = xi[c] - xl[c];
    const double v = xj[c] - xl[c];
    ni += u * u;
    nj += v * v;
  }
  const double inv_i = 1.0 / std::sqrt(ni);
  const double inv_j = 1.0 / std::sqrt(nj);
  double diff = 0.0, sum = 0.0;
  for (std::size_t c = 0; c < xl.size(); ++c) {
    const double u = (xi[c] - xl[c]) * inv_i;
    const double v = (xj[c] - xl[c]) * inv_j;
    diff += (u - v) * (u - v);
    sum += (u + v) * (u + v);
  }
  return 2.0 * std::atan2(std::sqrt(diff), std::sqrt(sum));
}

}  // namespace labelcor
