#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "labelcor/dataset.hpp"
#include "labelcor/rng.hpp"

namespace testing_support {

using labelcor::Dataset;
using labelcor::Matrix;
using labelcor::Xoshiro256;

inline Matrix normal_matrix(std::size_t n, std::size_t p, Xoshiro256& rng) {
  Matrix x(n, p);
  for (auto& v : x.data()) v = rng.normal();
  return x;
}

// Integer grid values in [0, levels), so ties are frequent.
inline Matrix tied_matrix(std::size_t n, std::size_t p, std::uint64_t levels, Xoshiro256& rng) {
  Matrix x(n, p);
  for (auto& v : x.data()) v = static_cast<double>(rng.below(levels));
  return x;
}

inline std::vector<std::int64_t> random_labels(std::size_t n, std::size_t k, Xoshiro256& rng) {
  std::vector<std::int64_t> y(n);
  for (auto& v : y) v = static_cast<std::int64_t>(rng.below(k));
  return y;
}

inline Dataset random_dataset(std::size_t n, std::size_t p, std::size_t k, Xoshiro256& rng) {
  auto y = random_labels(n, k, rng);
  return Dataset::build(normal_matrix(n, p, rng), y);
}

// Class c sits at the constant point (c, 2c, ...); every class gets `per_class` rows.
inline Dataset class_constant(std::size_t k, std::size_t per_class, std::size_t p) {
  Matrix x(k * per_class, p);
  std::vector<std::int64_t> y;
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t r = 0; r < per_class; ++r) {
      const std::size_t row = c * per_class + r;
      for (std::size_t j = 0; j < p; ++j) x(row, j) = static_cast<double>(c * (j + 1));
      y.push_back(static_cast<std::int64_t>(c));
    }
  }
  return Dataset::build(std::move(x), y);
}

inline Eigen::MatrixXd random_orthogonal(std::size_t p, Xoshiro256& rng) {
  Eigen::MatrixXd g(p, p);
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  return q;
}

// Row-wise x -> a * C x + b.
inline Matrix affine(const Matrix& x, const Eigen::MatrixXd& c, double a,
                     const std::vector<double>& b) {
  Matrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t r = 0; r < x.cols(); ++r) {
      double s = 0.0;
      for (std::size_t k = 0; k < x.cols(); ++k) s += c(r, k) * x(i, k);
      out(i, r) = a * s + b[r];
    }
  }
  return out;
}

// Textbook angle: arccos of the clamped cosine at vertex xl, with the degenerate conventions.
inline double oracle_angle(std::span<const double> xi, std::span<const double> xj,
                           std::span<const double> xl) {
  double dot = 0.0, ni = 0.0, nj = 0.0;
  for (std::size_t k = 0; k < xl.size(); ++k) {
    const double u = xi[k] - xl[k];
    const double v = xj[k] - xl[k];
    dot += u * v;
    ni += u * u;
    nj += v * v;
  }
  if (ni == 0.0 && nj == 0.0) return -std::numbers::pi;
  if (ni == 0.0 || nj == 0.0) return 0.0;
  return std::acos(std::clamp(dot / std::sqrt(ni * nj), -1.0, 1.0));
}

struct OracleComponents {
  double s1, s2, s3, pcor;
};

inline OracleComponents oracle_pcor(const Dataset& d) {
  const auto& x = d.x();
  const std::size_t n = d.n();
  std::vector<double> nk(d.num_classes(), 0.0);
  for (auto l : d.labels()) nk[l] += 1.0;
  double a_all = 0.0, a_within = 0.0, eq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double row = 0.0;
      for (std::size_t l = 0; l < n; ++l) row += oracle_angle(x.row(i), x.row(j), x.row(l));
      a_all += row;
      if (d.labels()[i] == d.labels()[j]) a_within += row / nk[d.labels()[i]];
      eq += std::equal(x.row(i).begin(), x.row(i).end(), x.row(j).begin()) ? 1.0 : 0.0;
    }
  }
  const double n2 = static_cast<double>(n) * n;
  OracleComponents c{a_all / (n2 * n), a_within / n2, eq / n2, 0.0};
  const double den = c.s1 + std::numbers::pi * c.s3;
  c.pcor = std::abs(den) <= 1e-12 ? 0.0 : (c.s1 - c.s2) / den;
  return c;
}

}  // namespace testing_support
