#include "labelcor/method.hpp"

#include <stdexcept>
#include <string>
#include <variant>

#include "labelcor/baselines.hpp"
#include "labelcor/pcor_multivariate.hpp"
#include "labelcor/pcor_univariate.hpp"
#include "labelcor/reference.hpp"

namespace labelcor {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::pcor:
      return "pcor";
    case Method::gcor:
      return "gcor";
    case Method::gkcor:
      return "gkcor";
    case Method::pearson:
      return "pearson";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (const Method m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

double correlate(const Dataset& d, Method m, const CorrelationOptions& options) {
  switch (m) {
    case Method::pcor:
      if (options.force_bruteforce) {
        return d.p() == 1 ? pcor_univariate_bruteforce(d)
                          : reference::pcor_multivariate(d, options.tie_tolerance).pcor_hat;
      }
      if (d.p() == 1) return pcor_univariate(d).pcor_hat;
      return pcor_multivariate(d, {options.tie_tolerance, options.threads}).pcor_hat;
    case Method::gcor:
      return options.force_bruteforce ? reference::gini_cor(d) : gini_cor(d, options.threads);
    case Method::gkcor:
      return options.force_bruteforce ? reference::gini_kernel_cor(d, options.sigma2)
                                      : gini_kernel_cor(d, options.sigma2, options.threads);
    case Method::pearson:
      return pearson_cat_cor(d);
  }
  throw std::invalid_argument("unknown method");
}

struct PreparedStatistic::Impl {
  std::variant<AnglePairTable, RankCountTable, PairDistanceTable, Dataset> state;
};

PreparedStatistic::PreparedStatistic(const Dataset& d, Method m, const CorrelationOptions& options)
    : method_(m), impl_(std::make_unique<Impl>()) {
  switch (m) {
    case Method::pcor:
      if (d.p() == 1) {
        impl_->state = RankCountTable::compute(d.x().data());
      } else {
        impl_->state = AnglePairTable::compute(d.x(), {options.tie_tolerance, options.threads});
      }
      break;
    case Method::gcor:
      impl_->state = PairDistanceTable::compute(d.x(), PairMetric::euclidean, 1.0, options.threads);
      break;
    case Method::gkcor:
      impl_->state = PairDistanceTable::compute(d.x(), PairMetric::gaussian_kernel, options.sigma2,
                                                options.threads);
      break;
    case Method::pearson:
      impl_->state = d;
      break;
  }
}

PreparedStatistic::~PreparedStatistic() = default;
PreparedStatistic::PreparedStatistic(PreparedStatistic&&) noexcept = default;
PreparedStatistic& PreparedStatistic::operator=(PreparedStatistic&&) noexcept = default;

double PreparedStatistic::evaluate(const ClassPartition& partition) const {
  struct Visitor {
    const ClassPartition& part;
    double operator()(const AnglePairTable& t) const { return t.components(part).pcor_hat; }
    double operator()(const RankCountTable& t) const { return t.pcor(part); }
    double operator()(const PairDistanceTable& t) const { return t.ratio(part); }
    double operator()(const Dataset& d) const {
      std::vector<std::uint32_t> labels(d.n());
      for (const auto& cls : part.classes()) {
        for (const std::size_t i : cls.indices) labels[i] = cls.id;
      }
      return pearson_cat_cor(d.with_labels(std::move(labels)));
    }
  };
  return std::visit(Visitor{partition}, impl_->state);
}

}  // namespace labelcor
