#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "slicecheck/error.hpp"
#include "slicecheck/metrics.hpp"

#include "oracle.hpp"

using namespace slicecheck;

namespace {

// Braced lists do not convert to std::span; name the vector explicitly.
std::vector<std::string> sv(std::initializer_list<const char*> values) {
  return {values.begin(), values.end()};
}

void check_against_oracle(const std::vector<std::string>& gold,
                          const std::vector<std::string>& pred) {
  ClassificationReport report = classification_report(gold, pred);
  oracle::Report expected = oracle::report(gold, pred);
  REQUIRE(report.labels == expected.labels);
  for (const std::string& label : report.labels) {
    const ClassMetrics* got = report.find(label);
    REQUIRE(got != nullptr);
    const oracle::Row& want = expected.per_class[label];
    CHECK(got->precision == doctest::Approx(want.precision).epsilon(1e-12));
    CHECK(got->recall == doctest::Approx(want.recall).epsilon(1e-12));
    CHECK(got->f1 == doctest::Approx(want.f1).epsilon(1e-12));
    CHECK(got->support == want.support);
  }
  CHECK(report.macro_avg.precision == doctest::Approx(expected.macro.precision).epsilon(1e-12));
  CHECK(report.weighted_avg.f1 == doctest::Approx(expected.weighted.f1).epsilon(1e-12));
  CHECK(report.accuracy == doctest::Approx(expected.accuracy).epsilon(1e-12));
  CHECK(report.total == gold.size());
}

}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("hand-computed two-class example") {
    // gold:    a a a b b
    // pred:    a b a b b
    std::vector<std::string> gold = {"a", "a", "a", "b", "b"};
    std::vector<std::string> pred = {"a", "b", "a", "b", "b"};
    ClassificationReport r = classification_report(gold, pred);
    const ClassMetrics* a = r.find("a");
    REQUIRE(a != nullptr);
    CHECK(a->precision == doctest::Approx(1.0));        // 2 predicted a, both right
    CHECK(a->recall == doctest::Approx(2.0 / 3.0));     // 2 of 3 gold a found
    CHECK(a->f1 == doctest::Approx(0.8));
    CHECK(a->support == 3);
    const ClassMetrics* b = r.find("b");
    REQUIRE(b != nullptr);
    CHECK(b->precision == doctest::Approx(2.0 / 3.0));
    CHECK(b->recall == doctest::Approx(1.0));
    CHECK(b->support == 2);
    CHECK(r.accuracy == doctest::Approx(0.8));
    CHECK(r.macro_avg.support == 5);
    CHECK(r.weighted_avg.support == 5);
  }

  TEST_CASE("labels default to the sorted observed set") {
    ClassificationReport r = classification_report(sv({"b", "a"}), sv({"c", "a"}));
    CHECK(r.labels == std::vector<std::string>{"a", "b", "c"});
  }

  TEST_CASE("an explicit label set adds zero-support rows") {
    std::vector<std::string> labels = {"x", "y", "z"};
    ClassificationReport r = classification_report(sv({"x", "x"}), sv({"x", "y"}), &labels);
    const ClassMetrics* z = r.find("z");
    REQUIRE(z != nullptr);
    CHECK(z->support == 0);
    CHECK(z->precision == 0.0);
    CHECK(z->recall == 0.0);
    CHECK(z->degenerate);
  }

  TEST_CASE("an explicit label set must cover the observed labels") {
    std::vector<std::string> labels = {"x"};
    try {
      classification_report(sv({"x"}), sv({"y"}), &labels);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Label);
    }
  }

  TEST_CASE("length mismatch raises a count error") {
    try {
      classification_report(sv({"a"}), sv({"a", "b"}));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Count);
    }
  }

  TEST_CASE("empty input is flagged, not an error") {
    ClassificationReport r = classification_report(sv({}), sv({}));
    CHECK(r.empty_input);
    CHECK(r.total == 0);
    CHECK(r.accuracy == 0.0);
  }

  TEST_CASE("degenerate classes are flagged") {
    // "b" never predicted: precision degenerate. "c" predicted, no support.
    ClassificationReport r = classification_report(sv({"a", "b"}), sv({"a", "c"}));
    CHECK(r.find("b")->degenerate);
    CHECK(r.find("c")->degenerate);
    CHECK_FALSE(r.find("a")->degenerate);
  }

  TEST_CASE("confusion counts") {
    ConfusionCounts counts = confusion_counts(sv({"a", "a", "b"}), sv({"a", "b", "b"}));
    CHECK(counts[{"a", "a"}] == 1);
    CHECK(counts[{"a", "b"}] == 1);
    CHECK(counts[{"b", "b"}] == 1);
    CHECK(counts.size() == 3);
  }

  TEST_CASE("report csv shape") {
    std::ostringstream out;
    write_report_csv(out, classification_report(sv({"a", "b"}), sv({"a", "b"})));
    std::string text = out.str();
    CHECK(text.find("Metrics,precision,recall,f1-score,support") != std::string::npos);
    CHECK(text.find("macro avg,") != std::string::npos);
    CHECK(text.find("weighted avg,") != std::string::npos);
    CHECK(text.find("a,1.000,1.000,1.000,1") != std::string::npos);
  }

  TEST_CASE("report json carries full precision") {
    ClassificationReport r = classification_report(sv({"a", "a", "b"}), sv({"a", "b", "b"}));
    nlohmann::json j = report_to_json(r);
    CHECK(j["classes"]["a"]["recall"].get<double>() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(j["accuracy"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(j["total"] == 3);
  }

  TEST_CASE("format_metric pads to three decimals") {
    CHECK(format_metric(0.5) == "0.500");
    CHECK(format_metric(1.0) == "1.000");
    CHECK(format_metric(2.0 / 3.0) == "0.667");
  }

  TEST_CASE("randomized agreement with the counting oracle") {
    std::mt19937_64 rng(42);
    const std::vector<std::string> alphabet = {"a", "b", "c", "d"};
    for (int trial = 0; trial < 300; ++trial) {
      std::size_t n = 1 + rng() % 200;
      std::size_t k = 1 + rng() % alphabet.size();
      std::vector<std::string> gold(n), pred(n);
      for (std::size_t i = 0; i < n; ++i) {
        gold[i] = alphabet[rng() % k];
        pred[i] = alphabet[rng() % k];
      }
      check_against_oracle(gold, pred);
    }
  }
}
