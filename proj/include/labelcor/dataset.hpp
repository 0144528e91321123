#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "labelcor/matrix.hpp"

namespace labelcor {

/// A validated sample: n x p numeric matrix plus one categorical label per row.
///
/// External labels (strings, integer or real category codes) are re-encoded to
/// dense ids 0..K-1 in order of first occurrence. Every class is non-empty by
/// construction. Immutable after construction.
class Dataset {
 public:
  /// Throws DataError on row/label count mismatch, non-finite cells, n < 2 or p < 1.
  static Dataset build(Matrix x, std::span<const std::string> labels);
  static Dataset build(Matrix x, std::span<const std::int64_t> labels);
  /// Real-valued category codes, compared exactly (e.g. SNP codes -1/0/1).
  static Dataset build_from_codes(Matrix x, std::span<const double> codes);

  /// Same rows, new dense labels (each id in 0..num_classes-1 must occur).
  Dataset with_labels(std::vector<std::uint32_t> labels) const;

  std::size_t n() const noexcept { return x_.rows(); }
  std::size_t p() const noexcept { return x_.cols(); }
  std::size_t num_classes() const noexcept { return names_.size(); }

  const Matrix& x() const noexcept { return x_; }
  std::span<const std::uint32_t> labels() const noexcept { return labels_; }
  const std::vector<std::string>& label_names() const noexcept { return names_; }

 private:
  Dataset(Matrix x, std::vector<std::uint32_t> labels, std::vector<std::string> names);

  Matrix x_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::string> names_;
};

struct LabelClass {
  std::uint32_t id = 0;
  std::string name;
  std::vector<std::size_t> indices;  // ascending
  double frequency = 0.0;            // n_k / n

  std::size_t size() const noexcept { return indices.size(); }
};

/// Per-label index sets, counts and frequencies.
class ClassPartition {
 public:
  /// Dense labels in 0..num_classes-1; every id must occur at least once.
  /// Class names default to the decimal id.
  static ClassPartition from_labels(std::span<const std::uint32_t> labels, std::size_t num_classes,
                                    std::span<const std::string> names = {});
  /// A single class holding every index 0..n-1.
  static ClassPartition single(std::size_t n);

  const std::vector<LabelClass>& classes() const noexcept { return classes_; }
  std::size_t num_classes() const noexcept { return classes_.size(); }
  std::size_t n() const noexcept { return n_; }

 private:
  std::vector<LabelClass> classes_;
  std::size_t n_ = 0;
};

ClassPartition class_partition(const Dataset& d);

}  // namespace labelcor
