#include "slicecheck/csv.hpp"

#include <istream>
#include <ostream>

#include "slicecheck/error.hpp"

namespace slicecheck::csv {

namespace {

bool needs_quoting(const std::string& field) {
  return field.find_first_of(",\"\r\n") != std::string::npos;
}

}  // namespace

std::string escape_field(const std::string& field) {
  if (!needs_quoting(field)) return field;
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.put(',');
    out << escape_field(fields[i]);
  }
  out.put('\n');
}

Records read(std::istream& in) {
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t pos = 0;
  if (data.size() >= 3 && data.compare(0, 3, "\xEF\xBB\xBF") == 0) pos = 3;

  Records records;
  std::size_t line = 1;
  bool header_seen = false;

  while (pos < data.size()) {
    std::size_t record_line = line;
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool done = false;

    while (!done) {
      if (pos >= data.size()) {
        if (in_quotes) raise(ErrorCode::Parse, "unterminated quoted field starting near line " + std::to_string(record_line));
        break;
      }
      char c = data[pos];
      if (in_quotes) {
        if (c == '"') {
          if (pos + 1 < data.size() && data[pos + 1] == '"') {
            field.push_back('"');
            pos += 2;
          } else {
            in_quotes = false;
            ++pos;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
          ++pos;
        }
      } else {
        switch (c) {
          case '"':
            if (field.empty()) {
              in_quotes = true;
            } else {
              field.push_back(c);  // stray quote mid-field, kept literally
            }
            ++pos;
            break;
          case ',':
            fields.push_back(std::move(field));
            field.clear();
            ++pos;
            break;
          case '\r':
            ++pos;
            if (pos < data.size() && data[pos] == '\n') ++pos;
            ++line;
            done = true;
            break;
          case '\n':
            ++pos;
            ++line;
            done = true;
            break;
          default:
            field.push_back(c);
            ++pos;
            break;
        }
      }
    }
    fields.push_back(std::move(field));

    // A blank line is not a record.
    if (fields.size() == 1 && fields[0].empty()) continue;

    if (!header_seen) {
      records.header = std::move(fields);
      header_seen = true;
    } else {
      if (fields.size() != records.header.size()) {
        raise(ErrorCode::Parse, "line " + std::to_string(record_line) + ": expected " +
                                    std::to_string(records.header.size()) + " fields, got " +
                                    std::to_string(fields.size()));
      }
      records.rows.push_back(std::move(fields));
    }
  }

  if (!header_seen) raise(ErrorCode::Parse, "empty input: a header row is required");
  return records;
}

}  // namespace slicecheck::csv
