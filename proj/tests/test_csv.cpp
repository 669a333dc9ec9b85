#include <doctest.h>

#include <sstream>

#include "slicecheck/csv.hpp"
#include "slicecheck/error.hpp"

using namespace slicecheck;

namespace {

csv::Records parse(const std::string& text) {
  std::istringstream in(text);
  return csv::read(in);
}

}  // namespace

TEST_SUITE("csv") {
  TEST_CASE("plain rows") {
    csv::Records records = parse("a,b,c\n1,2,3\nx,y,z\n");
    CHECK(records.header == std::vector<std::string>{"a", "b", "c"});
    REQUIRE(records.rows.size() == 2);
    CHECK(records.rows[0] == std::vector<std::string>{"1", "2", "3"});
    CHECK(records.rows[1] == std::vector<std::string>{"x", "y", "z"});
  }

  TEST_CASE("quoted fields with commas, quotes and newlines") {
    csv::Records records = parse("a,b\n\"hi, there\",\"she said \"\"go\"\"\"\n\"two\nlines\",x\n");
    REQUIRE(records.rows.size() == 2);
    CHECK(records.rows[0][0] == "hi, there");
    CHECK(records.rows[0][1] == "she said \"go\"");
    CHECK(records.rows[1][0] == "two\nlines");
  }

  TEST_CASE("crlf line endings") {
    csv::Records records = parse("a,b\r\n1,2\r\n");
    CHECK(records.header == std::vector<std::string>{"a", "b"});
    REQUIRE(records.rows.size() == 1);
    CHECK(records.rows[0] == std::vector<std::string>{"1", "2"});
  }

  TEST_CASE("trailing blank lines are skipped") {
    csv::Records records = parse("a,b\n1,2\n\n\n");
    CHECK(records.rows.size() == 1);
  }

  TEST_CASE("ragged row raises a parse error naming the line") {
    CHECK_THROWS_AS(parse("a,b\n1,2,3\n"), Error);
    try {
      parse("a,b\n1\n");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }

  TEST_CASE("escape round trip") {
    std::vector<std::string> fields = {"plain", "with,comma", "with\"quote", "multi\nline", ""};
    std::ostringstream out;
    csv::write_row(out, fields);
    csv::Records records = parse("a,b,c,d,e\n" + out.str());
    REQUIRE(records.rows.size() == 1);
    CHECK(records.rows[0] == fields);
  }

  TEST_CASE("empty input raises a parse error") {
    CHECK_THROWS_AS(parse(""), Error);
  }
}
