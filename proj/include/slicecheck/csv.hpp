#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slicecheck::csv {

struct Records {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// RFC-4180-style reader: quoted fields, doubled quotes, newlines inside
// quotes, LF or CRLF records, optional UTF-8 BOM. The header row is
// mandatory. A record with the wrong field count raises a Parse error with
// the physical line on which the record starts.
Records read(std::istream& in);

std::string escape_field(const std::string& field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace slicecheck::csv
