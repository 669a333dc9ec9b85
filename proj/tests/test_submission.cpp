#include <doctest.h>

#include <fstream>
#include <functional>
#include <sstream>

#include "slicecheck/error.hpp"
#include "slicecheck/submission.hpp"

using namespace slicecheck;

namespace {

Table table_from(const std::string& csv_text) {
  std::istringstream in(csv_text);
  return Table::from_csv(in);
}

DatasetDescriptor tiny_descriptor() {
  DatasetDescriptor d;
  d.name = "tiny";
  d.text_column = "T";
  d.gold_column = "G";
  d.label_domain = {"OFF", "NOT"};
  return d;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

}  // namespace

TEST_SUITE("submission") {
  TEST_CASE("forward maps are kept as written") {
    LabelMap map = resolve_label_map({{"LABEL_0", "NOT"}, {"LABEL_1", "OFF"}},
                                     {"LABEL_0", "LABEL_1"}, {"OFF", "NOT"});
    CHECK(map.pairs.at("LABEL_0") == "NOT");
    CHECK(map.pairs.at("LABEL_1") == "OFF");
  }

  TEST_CASE("gold-to-prediction bijections are inverted") {
    LabelMap map =
        resolve_label_map({{"OFF", "1.0"}, {"NOT", "0.0"}}, {"1.0", "0.0"}, {"OFF", "NOT"});
    CHECK(map.pairs.at("1.0") == "OFF");
    CHECK(map.pairs.at("0.0") == "NOT");
  }

  TEST_CASE("many-to-one is only legal in prediction-to-gold direction") {
    // Two predicted labels onto one gold label: fine forward.
    LabelMap map = resolve_label_map({{"p1", "OFF"}, {"p2", "OFF"}, {"p3", "NOT"}},
                                     {"p1", "p2", "p3"}, {"OFF", "NOT"});
    CHECK(map.pairs.at("p2") == "OFF");
    // Written gold->prediction with a repeated target: cannot invert.
    CHECK(code_of([] {
            resolve_label_map({{"OFF", "x"}, {"NOT", "x"}}, {"x"}, {"OFF", "NOT"});
          }) == ErrorCode::Inversion);
  }

  TEST_CASE("maps valid in both directions need to be symmetric") {
    // Self-inverse swap: unambiguous even though both orientations fit.
    LabelMap map = resolve_label_map({{"a", "b"}, {"b", "a"}}, {"a", "b"}, {"a", "b"});
    CHECK(map.pairs.at("a") == "b");
    // Both-ways-valid but not symmetric: refuse to guess.
    CHECK(code_of([] {
            resolve_label_map({{"a", "b"}, {"b", "b"}}, {"a", "b"}, {"a", "b"});
          }) == ErrorCode::Orientation);
  }

  TEST_CASE("maps matching neither side raise a label error") {
    CHECK(code_of([] {
            resolve_label_map({{"q", "r"}}, {"x"}, {"y"});
          }) == ErrorCode::Label);
  }

  TEST_CASE("case folding applies to keys and targets") {
    LabelMap map = resolve_label_map({{"label_0", "not"}, {"label_1", "off"}},
                                     {"LABEL_0", "LABEL_1"}, {"OFF", "NOT"}, true);
    // Targets come back in the gold domain's spelling.
    CHECK(map.pairs.at("label_0") == "NOT");
    CHECK(map.pairs.at("label_1") == "OFF");
    CHECK(code_of([] {
            resolve_label_map({{"A", "x"}, {"a", "x"}}, {"a", "A"}, {"x"}, true);
          }) == ErrorCode::Label);  // keys collide once folded
  }

  TEST_CASE("submit binds predictions and maps them") {
    Table t = table_from("T,G\nfirst,OFF\nsecond,NOT\nthird,OFF\n");
    SubmissionObject sub = submit(t, tiny_descriptor(), {"1.0", "0.0", "0.0"},
                                  {{"1.0", "OFF"}, {"0.0", "NOT"}});
    CHECK(sub.gold == std::vector<std::string>{"OFF", "NOT", "OFF"});
    CHECK(sub.mapped == std::vector<std::string>{"OFF", "NOT", "NOT"});
    CHECK(sub.gold_domain == std::vector<std::string>{"NOT", "OFF"});
    CHECK(sub.table.has_column("prediction"));
    CHECK(sub.table.has_column("prediction_mapped"));
    // Raw prediction strings survive untouched (no "1.0" -> "1").
    CHECK(sub.table.text_at(0, "prediction") == "1.0");
    CHECK(sub.table.text_at(0, "prediction_mapped") == "OFF");
  }

  TEST_CASE("prediction count must match the table") {
    Table t = table_from("T,G\nfirst,OFF\n");
    CHECK(code_of([&] {
            submit(t, tiny_descriptor(), {"1.0", "0.0"}, {{"1.0", "OFF"}, {"0.0", "NOT"}});
          }) == ErrorCode::Count);
  }

  TEST_CASE("empty predictions are rejected with their row") {
    Table t = table_from("T,G\nfirst,OFF\nsecond,NOT\n");
    try {
      submit(t, tiny_descriptor(), {"1.0", ""}, {{"1.0", "OFF"}, {"0.0", "NOT"}});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Count);
      CHECK(std::string(e.what()).find("row 2") != std::string::npos);
    }
  }

  TEST_CASE("unmapped predicted values raise a coverage error naming them") {
    Table t = table_from("T,G\nfirst,OFF\nsecond,NOT\n");
    try {
      submit(t, tiny_descriptor(), {"1.0", "weird"}, {{"1.0", "OFF"}, {"0.0", "NOT"}});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Coverage);
      CHECK(std::string(e.what()).find("weird") != std::string::npos);
    }
  }

  TEST_CASE("map targets must be gold labels") {
    Table t = table_from("T,G\nfirst,OFF\n");
    CHECK(code_of([&] {
            submit(t, tiny_descriptor(), {"1.0"}, {{"1.0", "MAYBE"}});
          }) == ErrorCode::Label);
  }

  TEST_CASE("load_predictions reads csv and jsonl") {
    {
      std::ofstream out("/tmp/slicecheck_preds.csv");
      out << "id,prediction\n1,LABEL_0\n2,\"has,comma\"\n";
    }
    std::vector<std::string> csv = load_predictions("/tmp/slicecheck_preds.csv");
    CHECK(csv == std::vector<std::string>{"LABEL_0", "has,comma"});
    {
      std::ofstream out("/tmp/slicecheck_preds.jsonl");
      out << "{\"prediction\": 1.0}\n{\"prediction\": \"LABEL_1\"}\n{\"prediction\": 0}\n";
    }
    std::vector<std::string> jsonl = load_predictions("/tmp/slicecheck_preds.jsonl");
    CHECK(jsonl == std::vector<std::string>{"1.0", "LABEL_1", "0"});
  }

  TEST_CASE("load_predictions errors carry context") {
    {
      std::ofstream out("/tmp/slicecheck_preds_bad.csv");
      out << "id,value\n1,x\n";
    }
    CHECK(code_of([] { load_predictions("/tmp/slicecheck_preds_bad.csv"); }) ==
          ErrorCode::Schema);
    {
      std::ofstream out("/tmp/slicecheck_preds_bad.jsonl");
      out << "{\"prediction\": 1}\nnot json\n";
    }
    try {
      load_predictions("/tmp/slicecheck_preds_bad.jsonl");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
}
