#include "labelcor/reference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace labelcor::reference {

PcorComponents pcor_multivariate(const Dataset& d, double tie_tolerance) {
  const std::size_t n = d.n();
  const auto& x = d.x();
  const auto y = d.labels();
  const auto part = class_partition(d);

  double s1 = 0.0;
  std::vector<double> per_class(part.num_classes(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        const double a = angle_kernel(x.row(i), x.row(j), x.row(l), tie_tolerance);
        s1 += a;
        if (y[i] == y[j]) per_class[y[i]] += a;
      }
    }
  }
  const double nd = static_cast<double>(n);
  s1 /= nd * nd * nd;

  double s2 = 0.0;
  for (const auto& cls : part.classes()) s2 += per_class[cls.id] / static_cast<double>(cls.size());
  s2 /= nd * nd;

  std::size_t equal = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool same = true;
      for (std::size_t c = 0; c < d.p(); ++c) same = same && std::abs(x(i, c) - x(j, c)) <= tie_tolerance;
      equal += same ? 1 : 0;
    }
  }
  const double s3 = static_cast<double>(equal) / (nd * nd);

  PcorComponents out{s1, s2, s3, 0.0};
  const double denom = s1 + std::numbers::pi * s3;
  out.pcor_hat = std::abs(denom) <= kDegenerateDenominator ? 0.0 : (s1 - s2) / denom;
  return out;
}

namespace {

template <typename Distance>
double gini_type(const Dataset& d, Distance dist) {
  const std::size_t n = d.n();
  const auto& x = d.x();
  const auto part = class_partition(d);
  const double nd = static_cast<double>(n);

  double overall = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) overall += dist(x.row(i), x.row(j));
  }
  overall /= nd * nd;
  if (overall <= kDegenerateDenominator) return 0.0;

  double within = 0.0;
  for (const auto& cls : part.classes()) {
    double s = 0.0;
    for (const std::size_t i : cls.indices) {
      for (const std::size_t j : cls.indices) s += dist(x.row(i), x.row(j));
    }
    const double nk = static_cast<double>(cls.size());
    within += cls.frequency * s / (nk * nk);
  }
  return (overall - within) / overall;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
  return s;
}

}  // namespace

double gini_cor(const Dataset& d) {
  return gini_type(d, [](auto a, auto b) { return std::sqrt(squared_distance(a, b)); });
}

double gini_kernel_cor(const Dataset& d, double sigma2) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be positive");
  // d(x, y)^2 = k(x,x) + k(y,y) - 2 k(x,y) with k = exp(-|x-y|^2 / sigma2) / 2
  return gini_type(d, [sigma2](auto a, auto b) {
    const double k = 0.5 * std::exp(-squared_distance(a, b) / sigma2);
    return std::sqrt(std::max(0.0, 0.5 + 0.5 - 2.0 * k));
  });
}

}  // namespace labelcor::reference
