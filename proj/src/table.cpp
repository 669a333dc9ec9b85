#include "slicecheck/table.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "slicecheck/csv.hpp"
#include "slicecheck/error.hpp"

namespace slicecheck {

namespace {

bool parse_integer(const std::string& text, std::int64_t& out) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool parse_real(const std::string& text, double& out) {
  if (text.empty()) return false;
  // Reject nan/inf words so text columns stay text.
  char c = text[0];
  if (c != '+' && c != '-' && c != '.' && !(c >= '0' && c <= '9')) return false;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

CellKind kind_of(const Cell& cell) noexcept {
  switch (cell.index()) {
    case 1: return CellKind::Text;
    case 2: return CellKind::Integer;
    case 3: return CellKind::Real;
    case 4: return CellKind::Boolean;
    default: return CellKind::Missing;
  }
}

bool is_missing(const Cell& cell) noexcept {
  return std::holds_alternative<std::monostate>(cell);
}

std::string cell_to_string(const Cell& cell) {
  switch (cell.index()) {
    case 1: return std::get<std::string>(cell);
    case 2: return std::to_string(std::get<std::int64_t>(cell));
    case 3: {
      std::string s = format_number(std::get<double>(cell));
      if (s.find_first_of(".eE") == std::string::npos &&
          s.find_first_of("0123456789") != std::string::npos) {
        s += ".0";
      }
      return s;
    }
    case 4: return std::get<bool>(cell) ? "true" : "false";
    default: return "";
  }
}

Column::Column(CellKind kind, std::vector<Cell> cells) : kind_(kind), cells_(std::move(cells)) {
  for (const Cell& cell : cells_) {
    if (!is_missing(cell) && kind_of(cell) != kind_) {
      raise(ErrorCode::Schema, "mixed cell kinds in a single column");
    }
  }
}

Column Column::from_strings(const std::vector<std::string>& values) {
  bool all_integer = true;
  bool all_real = true;
  bool all_boolean = true;
  bool any_present = false;

  for (const std::string& v : values) {
    if (v.empty()) continue;
    any_present = true;
    std::int64_t i;
    double d;
    if (!parse_integer(v, i)) all_integer = false;
    if (!parse_real(v, d)) all_real = false;
    if (v != "true" && v != "false") all_boolean = false;
  }

  CellKind kind = CellKind::Text;
  if (any_present) {
    if (all_integer) kind = CellKind::Integer;
    else if (all_real) kind = CellKind::Real;
    else if (all_boolean) kind = CellKind::Boolean;
  }

  std::vector<Cell> cells;
  cells.reserve(values.size());
  for (const std::string& v : values) {
    if (v.empty()) {
      cells.emplace_back(std::monostate{});
    } else if (kind == CellKind::Integer) {
      std::int64_t i = 0;
      parse_integer(v, i);
      cells.emplace_back(i);
    } else if (kind == CellKind::Real) {
      double d = 0;
      parse_real(v, d);
      cells.emplace_back(d);
    } else if (kind == CellKind::Boolean) {
      cells.emplace_back(v == "true");
    } else {
      cells.emplace_back(v);
    }
  }
  return Column(kind, std::move(cells));
}

Table::Table(std::vector<std::string> names, std::vector<Column> columns)
    : names_(std::move(names)), columns_(std::move(columns)) {
  if (names_.size() != columns_.size()) {
    raise(ErrorCode::Schema, "column name/data count mismatch");
  }
  row_count_ = columns_.empty() ? 0 : columns_.front().size();
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) raise(ErrorCode::Schema, "empty column name");
    if (!index_.emplace(names_[i], i).second) {
      raise(ErrorCode::Schema, "duplicate column name '" + names_[i] + "'");
    }
    if (columns_[i].size() != row_count_) {
      raise(ErrorCode::Schema, "column '" + names_[i] + "' has " +
                                   std::to_string(columns_[i].size()) + " rows, expected " +
                                   std::to_string(row_count_));
    }
  }
}

Table Table::from_csv(std::istream& in) {
  csv::Records records = csv::read(in);
  std::vector<Column> columns;
  columns.reserve(records.header.size());
  for (std::size_t c = 0; c < records.header.size(); ++c) {
    std::vector<std::string> values;
    values.reserve(records.rows.size());
    for (const auto& row : records.rows) values.push_back(row[c]);
    columns.push_back(Column::from_strings(values));
  }
  return Table(std::move(records.header), std::move(columns));
}

Table Table::from_jsonl(std::istream& in) {
  using nlohmann::json;

  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  // Raw per-column values; JSON kinds are unified column-globally below.
  struct Raw {
    std::vector<json> values;  // sized to current row on append
  };
  std::vector<Raw> raw;

  std::string line;
  std::size_t line_no = 0;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    json object;
    try {
      object = json::parse(line);
    } catch (const json::parse_error& e) {
      raise(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!object.is_object()) {
      raise(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected a JSON object");
    }
    for (auto& [key, value] : object.items()) {
      if (value.is_array() || value.is_object()) {
        raise(ErrorCode::Parse, "line " + std::to_string(line_no) + ": field '" + key +
                                    "' is nested; flat objects only");
      }
      auto it = index.find(key);
      std::size_t col;
      if (it == index.end()) {
        col = names.size();
        index.emplace(key, col);
        names.push_back(key);
        raw.emplace_back();
        raw.back().values.resize(rows);  // earlier rows lack the field
      } else {
        col = it->second;
      }
      raw[col].values.resize(rows);
      raw[col].values.push_back(value);
    }
    ++rows;
    for (auto& r : raw) r.values.resize(rows);
  }

  std::vector<Column> columns;
  columns.reserve(raw.size());
  for (const Raw& r : raw) {
    bool all_integer = true;
    bool all_real = true;
    bool all_boolean = true;
    bool any_present = false;
    for (const json& v : r.values) {
      if (v.is_null()) continue;
      any_present = true;
      if (!v.is_number_integer()) all_integer = false;
      if (!v.is_number()) all_real = false;
      if (!v.is_boolean()) all_boolean = false;
    }
    CellKind kind = CellKind::Text;
    if (any_present) {
      if (all_integer) kind = CellKind::Integer;
      else if (all_real) kind = CellKind::Real;
      else if (all_boolean) kind = CellKind::Boolean;
    }
    std::vector<Cell> cells;
    cells.reserve(r.values.size());
    for (const json& v : r.values) {
      if (v.is_null()) {
        cells.emplace_back(std::monostate{});
      } else if (kind == CellKind::Integer) {
        cells.emplace_back(v.get<std::int64_t>());
      } else if (kind == CellKind::Real) {
        cells.emplace_back(v.get<double>());
      } else if (kind == CellKind::Boolean) {
        cells.emplace_back(v.get<bool>());
      } else if (v.is_string()) {
        cells.emplace_back(v.get<std::string>());
      } else if (v.is_boolean()) {
        cells.emplace_back(std::string(v.get<bool>() ? "true" : "false"));
      } else if (v.is_number_integer()) {
        cells.emplace_back(std::to_string(v.get<std::int64_t>()));
      } else {
        Cell real(v.get<double>());
        cells.emplace_back(cell_to_string(real));
      }
    }
    columns.emplace_back(kind, std::move(cells));
  }
  return Table(std::move(names), std::move(columns));
}

Table Table::load_file(const std::filesystem::path& path, std::optional<Format> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::Io, "cannot open '" + path.string() + "'");
  if (!format) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    format = (ext == ".jsonl" || ext == ".ndjson") ? Format::Jsonl : Format::Csv;
  }
  return *format == Format::Jsonl ? from_jsonl(in) : from_csv(in);
}

bool Table::has_column(const std::string& name) const {
  return index_.find(name) != index_.end();
}

const Column& Table::column(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) raise(ErrorCode::Column, "unknown column '" + name + "'");
  return columns_[it->second];
}

const Cell& Table::at(std::size_t row, const std::string& name) const {
  return column(name).at(row);
}

std::string Table::text_at(std::size_t row, const std::string& name) const {
  return cell_to_string(at(row, name));
}

Table Table::select_rows(std::span<const std::size_t> indices) const {
  for (std::size_t i : indices) {
    if (i >= row_count_) {
      raise(ErrorCode::Bounds, "row index " + std::to_string(i) + " out of range (" +
                                   std::to_string(row_count_) + " rows)");
    }
  }
  std::vector<Column> columns;
  columns.reserve(columns_.size());
  for (const Column& col : columns_) {
    std::vector<Cell> cells;
    cells.reserve(indices.size());
    for (std::size_t i : indices) cells.push_back(col.at(i));
    columns.emplace_back(col.kind(), std::move(cells));
  }
  return Table(names_, std::move(columns));
}

Table Table::with_column(const std::string& name, Column column) const {
  if (column.size() != row_count_ && !(columns_.empty())) {
    raise(ErrorCode::Count, "new column '" + name + "' has " + std::to_string(column.size()) +
                                " rows, table has " + std::to_string(row_count_));
  }
  std::vector<std::string> names = names_;
  std::vector<Column> columns = columns_;
  auto existing = index_.find(name);
  if (existing != index_.end()) {
    columns[existing->second] = std::move(column);
  } else {
    names.push_back(name);
    columns.push_back(std::move(column));
  }
  return Table(std::move(names), std::move(columns));
}

void Table::write_csv(std::ostream& out) const {
  csv::write_row(out, names_);
  std::vector<std::string> fields(names_.size());
  for (std::size_t r = 0; r < row_count_; ++r) {
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      fields[c] = cell_to_string(columns_[c].at(r));
    }
    csv::write_row(out, fields);
  }
}

Table load_table(std::istream& in, Table::Format format) {
  return format == Table::Format::Csv ? Table::from_csv(in) : Table::from_jsonl(in);
}

std::vector<Group> group_rows(const Table& table, const std::string& column_name) {
  const Column& col = table.column(column_name);
  if (col.kind() == CellKind::Real) {
    raise(ErrorCode::Kind, "column '" + column_name +
                               "' holds real numbers; grouping needs a categorical column");
  }
  std::vector<Group> groups;
  std::unordered_map<std::string, std::size_t> by_key;
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    const Cell& cell = col.at(r);
    std::string key = is_missing(cell) ? kMissingKey : cell_to_string(cell);
    auto it = by_key.find(key);
    if (it == by_key.end()) {
      by_key.emplace(key, groups.size());
      groups.push_back(Group{std::move(key), {r}});
    } else {
      groups[it->second].rows.push_back(r);
    }
  }
  return groups;
}

}  // namespace slicecheck
