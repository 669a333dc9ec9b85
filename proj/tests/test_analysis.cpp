#include <doctest.h>

#include <random>
#include <sstream>

#include "slicecheck/analysis.hpp"
#include "slicecheck/error.hpp"
#include "slicecheck/submission.hpp"

#include "oracle.hpp"

using namespace slicecheck;

namespace {

Table table_from(const std::string& csv_text) {
  std::istringstream in(csv_text);
  return Table::from_csv(in);
}

DatasetDescriptor descriptor_for(const std::string& text_col, const std::string& gold_col,
                                 std::vector<std::string> labels) {
  DatasetDescriptor d;
  d.name = "test";
  d.text_column = text_col;
  d.gold_column = gold_col;
  d.label_domain = std::move(labels);
  return d;
}

// A small fixture with a categorical column, annotators and mixed outcomes.
SubmissionObject fixture() {
  Table t = table_from(
      "T,G,Cat,A1,A2\n"
      "alpha one,y,red,y,y\n"
      "bravo two words,n,blue,n,y\n"
      "charlie three words here,y,red,y,y\n"
      "delta,n,blue,n,n\n"
      "echo five,y,green,y,\n"
      "foxtrot six words in this row,n,red,n,n\n");
  return submit(t, descriptor_for("T", "G", {"y", "n"}),
                {"y", "y", "n", "n", "y", "n"}, {{"y", "y"}, {"n", "n"}});
}

DialectModel toy_model() {
  DialectModel model;
  model.topics = {"t0", "t1"};
  model.vocab["alpha"] = {0.9, 0.1};
  model.vocab["delta"] = {0.1, 0.9};
  model.vocab["echo"] = {0.8, 0.2};
  model.priors = {0.5, 0.5};
  return model;
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("analyze_on slices by first appearance and matches the oracle") {
    SubmissionObject sub = fixture();
    AnalysisResult result = analyze_on(sub, "Cat");
    CHECK(result.dimension == "Cat");
    REQUIRE(result.rows.size() == 3);
    CHECK(result.rows[0].slice == "red");
    CHECK(result.rows[1].slice == "blue");
    CHECK(result.rows[2].slice == "green");
    // red = rows 0,2,5: predictions y,n,n vs gold y,y,n -> 2 of 3 right.
    CHECK(result.rows[0].total == 3);
    CHECK(result.rows[0].total_correct == 2);
    CHECK(result.rows[0].accuracy == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    const ClassificationReport* red = result.find_report("red");
    REQUIRE(red != nullptr);
    oracle::Report expect = oracle::report({"y", "y", "n"}, {"y", "n", "n"}, {"n", "y"});
    CHECK(red->find("y")->recall == doctest::Approx(expect.per_class["y"].recall).epsilon(1e-12));
    CHECK(red->accuracy == doctest::Approx(expect.accuracy).epsilon(1e-12));
    // Overall report covers all six rows.
    CHECK(result.overall.total == 6);
  }

  TEST_CASE("analyze_on rejects unknown and real-valued columns") {
    SubmissionObject sub = fixture();
    try {
      analyze_on(sub, "Nope");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Column);
    }
    Table t = table_from("T,G,Score\nx,y,0.5\nz,n,0.7\n");
    SubmissionObject sub2 = submit(t, descriptor_for("T", "G", {"y", "n"}), {"y", "n"},
                                   {{"y", "y"}, {"n", "n"}});
    try {
      analyze_on(sub2, "Score");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Kind);
      CHECK(std::string(e.what()).find("length") != std::string::npos);
    }
  }

  TEST_CASE("reports include zero-support gold-domain labels") {
    SubmissionObject sub = fixture();
    AnalysisResult result = analyze_on(sub, "Cat");
    // green = row 4 only (gold y): label n appears with zero support.
    const ClassificationReport* green = result.find_report("green");
    REQUIRE(green != nullptr);
    REQUIRE(green->find("n") != nullptr);
    CHECK(green->find("n")->support == 0);
  }

  TEST_CASE("annotator agreement splits full vs partial and counts missing") {
    SubmissionObject sub = fixture();
    AnalysisResult result = check_anno_agreement(sub, {"A1", "A2"});
    CHECK(result.dimension == "annotator agreement");
    REQUIRE(result.rows.size() == 2);
    CHECK(result.rows[0].slice == "full");
    CHECK(result.rows[1].slice == "partial");
    // Rows 0,2,3,5 agree; row 1 disagrees; row 4 has a missing vote.
    CHECK(result.rows[0].total == 4);
    CHECK(result.rows[1].total == 2);
    CHECK(result.diagnostics.at("rows_with_missing_annotator_labels") == "1");
    CHECK_THROWS_AS(check_anno_agreement(sub, {"A1"}), Error);
    CHECK_THROWS_AS(check_anno_agreement(sub, {"A1", "Ghost"}), Error);
  }

  TEST_CASE("substring analysis") {
    SubmissionObject sub = fixture();
    AnalysisResult result = check_substring(sub, "words");
    CHECK(result.dimension == "substring 'words'");
    REQUIRE(result.rows.size() == 2);
    CHECK(result.rows[0].slice == "contains");
    CHECK(result.rows[0].total == 3);  // bravo, charlie, foxtrot
    CHECK(result.rows[1].slice == "not-contains");
    CHECK(result.rows[1].total == 3);
    AnalysisResult upper = check_substring(sub, "WORDS", {}, true);
    CHECK(upper.rows[0].total == 3);
    CHECK_THROWS_AS(check_substring(sub, ""), Error);
  }

  TEST_CASE("length analysis bins word counts") {
    SubmissionObject sub = fixture();
    AnalysisResult result = str_len_analysis(sub, LengthUnit::Words, 5);
    CHECK(result.dimension == "text length (words)");
    REQUIRE(result.rows.size() == 5);
    // Lengths are 2,3,4,1,2,6; bins of width 1 from 1 to 6.
    CHECK(result.rows[0].slice == "1–2");
    CHECK(result.rows[4].slice == "5–6");
    std::size_t total = 0;
    for (const PlotInfoRow& row : result.rows) total += row.total;
    CHECK(total == 6);
    CHECK(result.rows[0].total == 1);  // the one-word row
    CHECK(result.rows[1].total == 2);  // both two-word rows
    CHECK(result.rows[4].total == 1);  // the six-word row, max value in the last bin
    // A single-valued column collapses to one bin.
    Table t = table_from("T,G\nsame size,y\nalso size,n\n");
    SubmissionObject sub2 = submit(t, descriptor_for("T", "G", {"y", "n"}), {"y", "n"},
                                   {{"y", "y"}, {"n", "n"}});
    AnalysisResult one = str_len_analysis(sub2, LengthUnit::Words, 4);
    REQUIRE(one.rows.size() == 1);
    CHECK(one.rows[0].total == 2);
    CHECK_THROWS_AS(str_len_analysis(sub, LengthUnit::Words, 0), Error);
  }

  TEST_CASE("length analysis in characters") {
    SubmissionObject sub = fixture();
    AnalysisResult result = str_len_analysis(sub, LengthUnit::Characters, 3);
    CHECK(result.dimension == "text length (characters)");
    std::size_t total = 0;
    for (const PlotInfoRow& row : result.rows) total += row.total;
    CHECK(total == 6);
  }

  TEST_CASE("aave analysis splits at the threshold, boundary goes high") {
    SubmissionObject sub = fixture();
    DialectModel model = toy_model();
    AnalysisResult result = aave_analysis(sub, model, 0.5);
    CHECK(result.dimension == "aave score");
    REQUIRE(result.rows.size() == 3);
    CHECK(result.rows[0].slice == "score >= 0.5");
    CHECK(result.rows[1].slice == "score < 0.5");
    CHECK(result.rows[2].slice == "no-evidence");
    // alpha (0.9) and echo (0.8) high; delta (0.1) low; rest no evidence.
    CHECK(result.rows[0].total == 2);
    CHECK(result.rows[1].total == 1);
    CHECK(result.rows[2].total == 3);

    // A row scoring exactly the threshold lands in the high slice: the
    // two-token message w1+w2 from the worked example scores exactly 0.5.
    Table t = table_from("T,G\nw1 w2,y\n");
    SubmissionObject sub2 =
        submit(t, descriptor_for("T", "G", {"y", "n"}), {"y"}, {{"y", "y"}});
    DialectModel pair;
    pair.topics = {"t0", "t1"};
    pair.vocab["w1"] = {0.8, 0.2};
    pair.vocab["w2"] = {0.2, 0.8};
    pair.priors = {0.5, 0.5};
    AnalysisResult boundary = aave_analysis(sub2, pair, 0.5);
    REQUIRE(boundary.rows.size() == 2);
    CHECK(boundary.rows[0].slice == "score >= 0.5");
    CHECK(boundary.rows[0].total == 1);

    CHECK_THROWS_AS(aave_analysis(sub, model, 0.0), Error);
    CHECK_THROWS_AS(aave_analysis(sub, model, 1.0), Error);
  }

  TEST_CASE("aave analysis omits empty slice families") {
    // No scored rows at all: only the no-evidence slice appears.
    Table t = table_from("T,G\nzz qq,y\n");
    SubmissionObject sub =
        submit(t, descriptor_for("T", "G", {"y", "n"}), {"y"}, {{"y", "y"}});
    AnalysisResult result = aave_analysis(sub, toy_model(), 0.5);
    REQUIRE(result.rows.size() == 1);
    CHECK(result.rows[0].slice == "no-evidence");
  }

  TEST_CASE("cold categories follow the slur and nominalization rules") {
    Table t = table_from(
        "T,Off,Slur,Nom,Dist\n"
        "r1,N,Y,N,N\n"
        "r2,Y,Y,N,N\n"
        "r3,Y,N,Y,N\n"
        "r4,Y,N,N,Y\n"
        "r5,N,N,N,N\n"
        "r6,N,N,Y,N\n");
    DatasetDescriptor d = descriptor_for("T", "Off", {"Y", "N"});
    SubmissionObject sub =
        submit(t, d, {"LABEL_0", "LABEL_1", "LABEL_1", "LABEL_1", "LABEL_0", "LABEL_0"},
               {{"LABEL_0", "N"}, {"LABEL_1", "Y"}});
    AnalysisResult result = cold_analyze(sub);
    CHECK(result.dimension == "cold category");
    REQUIRE(result.rows.size() == 6);
    CHECK(result.rows[0].slice == "reclaimed");
    CHECK(result.rows[1].slice == "off-slur");
    CHECK(result.rows[2].slice == "off-nom");
    CHECK(result.rows[3].slice == "Off=Y|Slur=N|Nom=N|Dist=Y");
    CHECK(result.rows[4].slice == "Off=N|Slur=N|Nom=N|Dist=N");
    CHECK(result.rows[5].slice == "Off=N|Slur=N|Nom=Y|Dist=N");
    for (const PlotInfoRow& row : result.rows) CHECK(row.total == 1);
  }

  TEST_CASE("cold analysis prefers a Cat column and validates labels") {
    SubmissionObject sub = fixture();  // has Cat
    AnalysisResult result = cold_analyze(sub);
    CHECK(result.dimension == "Cat");
    Table t = table_from("T,Off,Slur,Nom,Dist\nr1,Y,maybe,N,N\n");
    SubmissionObject bad = submit(t, descriptor_for("T", "Off", {"Y", "N"}), {"Y"}, {{"Y", "Y"}});
    try {
      cold_analyze(bad);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Domain);
    }
    Table missing = table_from("T,Off\nr1,Y\n");
    SubmissionObject none =
        submit(missing, descriptor_for("T", "Off", {"Y", "N"}), {"Y"}, {{"Y", "Y"}});
    try {
      cold_analyze(none);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Schema);
    }
  }

  TEST_CASE("hatecheck categories are alphabetical with purity suffixes") {
    CHECK(hatecheck_category("derog_neg_emote_h").category == "derogation");
    CHECK(hatecheck_category("target_group_nh").category == "nonhateful-abuse");
    CHECK(hatecheck_category("spell_space_del_h").category == "spelling changes");
    Table t = table_from(
        "T,G,functionality\n"
        "a,hateful,derog_neg_emote_h\n"
        "b,hateful,derog_dehum_h\n"
        "c,non-hateful,counter_quote_nh\n"
        "d,hateful,slur_h\n"
        "e,non-hateful,slur_reclaimed_nh\n"
        "f,non-hateful,ident_neutral_nh\n"
        "g,hateful,mystery_case\n");
    DatasetDescriptor d = descriptor_for("T", "G", {"hateful", "non-hateful"});
    d.gold_column = "G";
    SubmissionObject sub = submit(
        t, d,
        {"LABEL_1", "LABEL_1", "LABEL_0", "LABEL_1", "LABEL_0", "LABEL_0", "LABEL_0"},
        {{"LABEL_0", "non-hateful"}, {"LABEL_1", "hateful"}});
    AnalysisResult result = hatecheck_analyze(sub);
    CHECK(result.dimension == "category");
    REQUIRE(result.rows.size() == 5);
    CHECK(result.rows[0].slice == "counter (nh)");
    CHECK(result.rows[1].slice == "derogation (h)");
    CHECK(result.rows[2].slice == "identity (nh)");
    CHECK(result.rows[3].slice == "mystery (h)");  // unknown prefix passes through
    CHECK(result.rows[4].slice == "slurs");        // mixed gold: no suffix
    CHECK(result.rows[4].total == 2);
  }

  TEST_CASE("hatecheck analysis sends missing functionality to the missing slice") {
    Table t = table_from("T,G,functionality\na,hateful,\nb,hateful,threat_dir_h\n");
    DatasetDescriptor d = descriptor_for("T", "G", {"hateful", "non-hateful"});
    SubmissionObject sub = submit(t, d, {"LABEL_1", "LABEL_1"},
                                  {{"LABEL_0", "non-hateful"}, {"LABEL_1", "hateful"}});
    AnalysisResult result = hatecheck_analyze(sub);
    REQUIRE(result.rows.size() == 2);
    CHECK(result.rows[0].slice == std::string(kMissingKey) + " (h)");
    CHECK(result.rows[1].slice == "threats (h)");
  }

  TEST_CASE("examples are sampled deterministically from wrong rows") {
    SubmissionObject sub = fixture();
    AnalysisOptions opts;
    opts.show_examples = true;
    opts.seed = 11;
    AnalysisResult a = analyze_on(sub, "Cat", opts);
    AnalysisResult b = analyze_on(sub, "Cat", opts);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].example.has_value() == b.rows[i].example.has_value());
      if (a.rows[i].example && b.rows[i].example) {
        CHECK(a.rows[i].example->text == b.rows[i].example->text);
        // The example really is an error from that slice.
        CHECK(a.rows[i].example->predicted != a.rows[i].example->gold);
      }
    }
    // Slices with no errors carry no example.
    AnalysisResult sub_result = check_substring(sub, "alpha", opts);
    const PlotInfoRow& contains = sub_result.rows[0];
    REQUIRE(contains.slice == "contains");
    CHECK(contains.total_correct == contains.total);
    CHECK_FALSE(contains.example.has_value());
    // Without the flag nothing is sampled.
    AnalysisResult quiet = analyze_on(sub, "Cat");
    for (const PlotInfoRow& row : quiet.rows) CHECK_FALSE(row.example.has_value());
  }

  TEST_CASE("compare_models aligns slices and reports deltas") {
    Table t = table_from("T,G,Cat\na,y,red\nb,n,red\nc,y,blue\nd,n,blue\n");
    DatasetDescriptor d = descriptor_for("T", "G", {"y", "n"});
    SubmissionObject a =
        submit(t, d, {"y", "n", "y", "n"}, {{"y", "y"}, {"n", "n"}});  // perfect
    SubmissionObject b =
        submit(t, d, {"y", "y", "n", "n"}, {{"y", "y"}, {"n", "n"}});  // half right
    ComparisonResult cmp = compare_models(a, b, "Cat");
    CHECK(cmp.dimension == "Cat");
    REQUIRE(cmp.rows.size() == 2);
    CHECK(cmp.rows[0].slice == "red");
    CHECK(cmp.rows[0].correct_a == 2);
    CHECK(cmp.rows[0].correct_b == 1);
    CHECK(cmp.rows[0].delta == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cmp.result_a.overall.accuracy == doctest::Approx(1.0));

    Table shorter = table_from("T,G,Cat\na,y,red\n");
    SubmissionObject c = submit(shorter, d, {"y"}, {{"y", "y"}});
    try {
      compare_models(a, c, "Cat");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Alignment);
    }
    Table regold = table_from("T,G,Cat\na,n,red\nb,n,red\nc,y,blue\nd,n,blue\n");
    SubmissionObject e2 = submit(regold, d, {"n", "n", "y", "n"}, {{"y", "y"}, {"n", "n"}});
    try {
      compare_models(a, e2, "Cat");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Alignment);
      CHECK(std::string(e.what()).find("row 1") != std::string::npos);
    }
  }

  TEST_CASE("slices always partition the table") {
    std::mt19937_64 rng(99);
    const std::vector<std::string> cats = {"red", "blue", "green", ""};
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t n = 1 + rng() % 50;
      std::ostringstream csv;
      csv << "T,G,Cat\n";
      for (std::size_t i = 0; i < n; ++i) {
        csv << "word" << rng() % 8 << " tail" << rng() % 3 << "," << (rng() % 2 ? "y" : "n")
            << "," << cats[rng() % cats.size()] << "\n";
      }
      Table t = table_from(csv.str());
      std::vector<std::string> preds(n);
      for (std::size_t i = 0; i < n; ++i) preds[i] = rng() % 2 ? "y" : "n";
      SubmissionObject sub =
          submit(t, descriptor_for("T", "G", {"y", "n"}), preds, {{"y", "y"}, {"n", "n"}});
      for (const AnalysisResult& result :
           {analyze_on(sub, "Cat"), check_substring(sub, "word1"),
            str_len_analysis(sub, LengthUnit::Words, 3)}) {
        std::size_t total = 0;
        for (const PlotInfoRow& row : result.rows) {
          total += row.total;
          const ClassificationReport* report = result.find_report(row.slice);
          REQUIRE(report != nullptr);
          if (!row.empty_slice) {
            CHECK(report->accuracy == doctest::Approx(row.accuracy).epsilon(1e-12));
          }
        }
        CHECK(total == n);
      }
    }
  }
}
