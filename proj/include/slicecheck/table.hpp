#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace slicecheck {

enum class CellKind { Text, Integer, Real, Boolean, Missing };

// A cell is missing (monostate) or holds one typed value.
using Cell = std::variant<std::monostate, std::string, std::int64_t, double, bool>;

CellKind kind_of(const Cell& cell) noexcept;
bool is_missing(const Cell& cell) noexcept;

// Canonical text form used for group keys, label comparison and CSV output.
// Reals keep a '.' or exponent so the kind survives a CSV round trip
// (1.0 -> "1.0"). Missing renders as the empty string.
std::string cell_to_string(const Cell& cell);

// Shortest round-trip decimal form of a double ("2", "6.5", "0.702...").
std::string format_number(double value);

class Column {
 public:
  Column() = default;
  Column(CellKind kind, std::vector<Cell> cells);

  // Builds a column from raw text fields, inferring the cell kind
  // column-globally: all-integer -> Integer, all-numeric -> Real,
  // all "true"/"false" -> Boolean, otherwise Text. Empty fields -> missing.
  static Column from_strings(const std::vector<std::string>& values);

  CellKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return cells_.size(); }
  const Cell& at(std::size_t row) const { return cells_.at(row); }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

 private:
  CellKind kind_ = CellKind::Text;
  std::vector<Cell> cells_;
};

// Immutable column-oriented record table. Derived tables copy their cells;
// instances are safe to share across threads.
class Table {
 public:
  enum class Format { Csv, Jsonl };

  Table() = default;
  Table(std::vector<std::string> names, std::vector<Column> columns);

  static Table from_csv(std::istream& in);
  static Table from_jsonl(std::istream& in);
  // Format is sniffed from the extension (.jsonl/.ndjson, else CSV) unless
  // given explicitly.
  static Table load_file(const std::filesystem::path& path,
                         std::optional<Format> format = std::nullopt);

  std::size_t row_count() const noexcept { return row_count_; }
  std::size_t column_count() const noexcept { return columns_.size(); }
  const std::vector<std::string>& column_names() const noexcept { return names_; }

  bool has_column(const std::string& name) const;
  const Column& column(const std::string& name) const;
  const Cell& at(std::size_t row, const std::string& column) const;
  std::string text_at(std::size_t row, const std::string& column) const;

  Table select_rows(std::span<const std::size_t> indices) const;
  Table with_column(const std::string& name, Column column) const;

  void write_csv(std::ostream& out) const;

 private:
  std::vector<std::string> names_;
  std::vector<Column> columns_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t row_count_ = 0;
};

Table load_table(std::istream& in, Table::Format format);

struct Group {
  std::string key;
  std::vector<std::size_t> rows;
};

inline constexpr const char* kMissingKey = "<missing>";

// Partitions row indices by the values of a text/integer/boolean column,
// groups ordered by first appearance; missing cells land under kMissingKey.
std::vector<Group> group_rows(const Table& table, const std::string& column);

}  // namespace slicecheck
