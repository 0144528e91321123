#include "labelcor/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "labelcor/errors.hpp"

namespace labelcor {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("matrix data size does not match its shape");
  }
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<double> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged rows in Matrix::from_rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(data));
}

Matrix Matrix::column_vector(std::span<const double> values) {
  return Matrix(values.size(), 1, std::vector<double>(values.begin(), values.end()));
}

std::vector<double> Matrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

namespace {

void validate(const Matrix& x, std::size_t num_labels) {
  if (x.rows() != num_labels) {
    throw DataError("dimension mismatch: " + std::to_string(x.rows()) + " rows but " +
                    std::to_string(num_labels) + " labels");
  }
  if (x.rows() < 2) throw DataError("need at least 2 samples, got " + std::to_string(x.rows()));
  if (x.cols() < 1) throw DataError("need at least 1 feature column");
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      if (!std::isfinite(x(r, c))) {
        throw DataError("non-finite value at (" + std::to_string(r) + ", " + std::to_string(c) +
                        ")");
      }
    }
  }
}

template <typename Label, typename Hash = std::hash<Label>, typename Name>
std::pair<std::vector<std::uint32_t>, std::vector<std::string>> encode(std::span<const Label> labels,
                                                                       Name&& name_of) {
  std::unordered_map<Label, std::uint32_t, Hash> ids;
  std::vector<std::uint32_t> dense;
  std::vector<std::string> names;
  dense.reserve(labels.size());
  for (const auto& label : labels) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<std::uint32_t>(names.size()));
    if (inserted) names.push_back(name_of(label));
    dense.push_back(it->second);
  }
  return {std::move(dense), std::move(names)};
}

std::string format_code(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Dataset::Dataset(Matrix x, std::vector<std::uint32_t> labels, std::vector<std::string> names)
    : x_(std::move(x)), labels_(std::move(labels)), names_(std::move(names)) {}

Dataset Dataset::build(Matrix x, std::span<const std::string> labels) {
  validate(x, labels.size());
  auto [dense, names] = encode<std::string>(labels, [](const std::string& s) { return s; });
  return Dataset(std::move(x), std::move(dense), std::move(names));
}

Dataset Dataset::build(Matrix x, std::span<const std::int64_t> labels) {
  validate(x, labels.size());
  auto [dense, names] =
      encode<std::int64_t>(labels, [](std::int64_t v) { return std::to_string(v); });
  return Dataset(std::move(x), std::move(dense), std::move(names));
}

Dataset Dataset::build_from_codes(Matrix x, std::span<const double> codes) {
  validate(x, codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (!std::isfinite(codes[i])) {
      throw DataError("non-finite label code at row " + std::to_string(i));
    }
  }
  // -0.0 and 0.0 are the same category.
  struct CodeHash {
    std::size_t operator()(double v) const noexcept { return std::hash<double>{}(v == 0.0 ? 0.0 : v); }
  };
  auto [dense, names] = encode<double, CodeHash>(codes, format_code);
  return Dataset(std::move(x), std::move(dense), std::move(names));
}

Dataset Dataset::with_labels(std::vector<std::uint32_t> labels) const {
  if (labels.size() != n()) throw std::invalid_argument("label count does not match rows");
  std::vector<bool> seen(num_classes(), false);
  for (auto l : labels) {
    if (l >= num_classes()) throw std::invalid_argument("label id out of range");
    seen[l] = true;
  }
  for (bool s : seen) {
    if (!s) throw std::invalid_argument("relabelling leaves a class empty");
  }
  return Dataset(x_, std::move(labels), names_);
}

ClassPartition ClassPartition::from_labels(std::span<const std::uint32_t> labels,
                                           std::size_t num_classes,
                                           std::span<const std::string> names) {
  ClassPartition part;
  part.n_ = labels.size();
  part.classes_.resize(num_classes);
  for (std::size_t k = 0; k < num_classes; ++k) {
    part.classes_[k].id = static_cast<std::uint32_t>(k);
    part.classes_[k].name = k < names.size() ? names[k] : std::to_string(k);
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= num_classes) throw std::invalid_argument("label id out of range");
    part.classes_[labels[i]].indices.push_back(i);
  }
  const double n = static_cast<double>(labels.size());
  for (auto& c : part.classes_) {
    if (c.indices.empty()) throw std::invalid_argument("class " + c.name + " has no samples");
    c.frequency = static_cast<double>(c.indices.size()) / n;
  }
  return part;
}

ClassPartition ClassPartition::single(std::size_t n) {
  ClassPartition part;
  part.n_ = n;
  LabelClass all;
  all.name = "0";
  all.indices.resize(n);
  for (std::size_t i = 0; i < n; ++i) all.indices[i] = i;
  all.frequency = 1.0;
  part.classes_.push_back(std::move(all));
  return part;
}

ClassPartition class_partition(const Dataset& d) {
  return ClassPartition::from_labels(d.labels(), d.num_classes(), d.label_names());
}

}  // namespace labelcor
