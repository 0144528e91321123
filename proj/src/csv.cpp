#include "labelcor/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "labelcor/errors.hpp"

namespace labelcor {

namespace {

std::vector<std::string> split_line(const std::string& line, char delimiter) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == delimiter) {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += ch;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

CsvTable read_csv_table(std::istream& in, char delimiter, bool header) {
  CsvTable table;
  std::string line;
  std::size_t width = 0;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_line(line, delimiter);
    if (first) {
      width = fields.size();
      first = false;
      if (header) {
        for (auto& f : fields) table.header.push_back(trim(f));
        continue;
      }
      for (std::size_t c = 0; c < width; ++c) table.header.push_back("c" + std::to_string(c));
    }
    if (fields.size() != width) {
      throw DataError("line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                      " fields, expected " + std::to_string(width));
    }
    table.rows.push_back(std::move(fields));
  }
  if (table.rows.empty()) throw DataError("empty file: no data rows");
  return table;
}

std::size_t resolve_column(const CsvTable& table, const std::string& name) {
  const auto it = std::find(table.header.begin(), table.header.end(), name);
  if (it != table.header.end()) return static_cast<std::size_t>(it - table.header.begin());
  if (all_digits(name)) {
    const std::size_t idx = std::stoul(name);
    if (idx < table.header.size()) return idx;
  }
  throw DataError("missing column \"" + name + "\"");
}

Matrix numeric_columns(const CsvTable& table, std::span<const std::size_t> columns) {
  Matrix x(table.rows.size(), columns.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const std::string cell = trim(table.rows[r][columns[c]]);
      double v = 0.0;
      const auto* end = cell.data() + cell.size();
      const auto [ptr, ec] = std::from_chars(cell.data(), end, v);
      if (cell.empty() || ec != std::errc{} || ptr != end) {
        throw DataError("could not parse \"" + cell + "\" as a number at row " +
                        std::to_string(r + 1) + ", column \"" + table.header[columns[c]] + "\"");
      }
      x(r, c) = v;
    }
  }
  return x;
}

Dataset parse_csv(std::istream& in, const CsvSchema& schema) {
  const CsvTable table = read_csv_table(in, schema.delimiter, schema.header);
  const std::size_t label_col = schema.label_column.empty()
                                    ? table.header.size() - 1
                                    : resolve_column(table, schema.label_column);
  std::vector<std::size_t> features;
  if (schema.feature_columns.empty()) {
    for (std::size_t c = 0; c < table.header.size(); ++c) {
      if (c != label_col) features.push_back(c);
    }
  } else {
    for (const auto& name : schema.feature_columns) features.push_back(resolve_column(table, name));
  }
  if (features.empty()) throw DataError("no feature columns");
  if (std::find(features.begin(), features.end(), label_col) != features.end()) {
    throw DataError("the label column cannot also be a feature column");
  }

  Matrix x = numeric_columns(table, features);
  std::vector<std::string> labels;
  labels.reserve(table.rows.size());
  for (const auto& row : table.rows) labels.push_back(trim(row[label_col]));
  return Dataset::build(std::move(x), labels);
}

Dataset load_csv(const std::filesystem::path& path, const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return parse_csv(in, schema);
}

void write_csv(std::ostream& out, const Matrix& x, std::span<const std::string> names,
               std::span<const double> extra_column, const std::string& extra_name) {
  if (names.size() != x.cols()) throw std::invalid_argument("column name count mismatch");
  const bool extra = !extra_column.empty();
  if (extra && extra_column.size() != x.rows()) throw std::invalid_argument("extra column length");
  for (std::size_t c = 0; c < names.size(); ++c) out << (c ? "," : "") << names[c];
  if (extra) out << (names.empty() ? "" : ",") << extra_name;
  out << '\n';
  char buf[64];
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      const auto res = std::to_chars(buf, buf + sizeof buf, x(r, c));
      out << (c ? "," : "") << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
    }
    if (extra) {
      const auto res = std::to_chars(buf, buf + sizeof buf, extra_column[r]);
      out << (x.cols() ? "," : "") << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
    }
    out << '\n';
  }
}

}  // namespace labelcor
