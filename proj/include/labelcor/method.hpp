#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "labelcor/dataset.hpp"

namespace labelcor {

enum class Method { pcor, gcor, gkcor, pearson };

inline constexpr Method kAllMethods[] = {Method::pcor, Method::gcor, Method::gkcor, Method::pearson};

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name);

struct CorrelationOptions {
  double tie_tolerance = 0.0;  // pcor, p >= 2
  double sigma2 = 1.0;         // gkcor bandwidth
  bool force_bruteforce = false;
  int threads = 0;
};

/// Routes pcor to the univariate fast path when p = 1 and to the cubic
/// estimator otherwise; force_bruteforce selects the serial reference paths.
double correlate(const Dataset& d, Method m, const CorrelationOptions& options = {});

/// A correlation with its label-independent work done once, scoring many
/// labellings of the same rows (permutation replicates).
class PreparedStatistic {
 public:
  PreparedStatistic(const Dataset& d, Method m, const CorrelationOptions& options = {});
  ~PreparedStatistic();
  PreparedStatistic(PreparedStatistic&&) noexcept;
  PreparedStatistic& operator=(PreparedStatistic&&) noexcept;

  Method method() const noexcept { return method_; }
  double evaluate(const ClassPartition& partition) const;

 private:
  struct Impl;
  Method method_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace labelcor
