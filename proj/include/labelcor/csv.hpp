#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "labelcor/dataset.hpp"
#include "labelcor/matrix.hpp"

namespace labelcor {

/// Column selection for load_csv. Columns are named by header text or, when the
/// text is all digits, by 0-based position.
struct CsvSchema {
  char delimiter = ',';
  bool header = true;
  std::string label_column;                  // empty: last column
  std::vector<std::string> feature_columns;  // empty: every column but the label
};

struct CsvTable {
  std::vector<std::string> header;  // synthesized as c0, c1, ... without a header row
  std::vector<std::vector<std::string>> rows;
};

/// Splits delimited text. Double-quoted fields may contain the delimiter and
/// doubled quotes. Throws DataError on ragged rows or empty input.
CsvTable read_csv_table(std::istream& in, char delimiter = ',', bool header = true);

Dataset parse_csv(std::istream& in, const CsvSchema& schema);
Dataset load_csv(const std::filesystem::path& path, const CsvSchema& schema);

/// Resolves a column given by name or 0-based index; throws DataError if absent.
std::size_t resolve_column(const CsvTable& table, const std::string& name);

/// Parses every cell of the given columns as a number (n x columns.size()).
Matrix numeric_columns(const CsvTable& table, std::span<const std::size_t> columns);

/// Writes `x` with column names `names`, optionally followed by a label column.
void write_csv(std::ostream& out, const Matrix& x, std::span<const std::string> names,
               std::span<const double> extra_column = {}, const std::string& extra_name = {});

}  // namespace labelcor
