// Acceptance checks for the whole toolkit. Each numbered criterion prints
// exactly one PASS/FAIL line; the process exits nonzero if any fail.
//
// Usage: acceptance <path-to-cli-binary> <path-to-toy-data-dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "slicecheck/analysis.hpp"
#include "slicecheck/datasets.hpp"
#include "slicecheck/dialect.hpp"
#include "slicecheck/error.hpp"
#include "slicecheck/metrics.hpp"
#include "slicecheck/plot.hpp"
#include "slicecheck/preprocess.hpp"
#include "slicecheck/submission.hpp"

#include "oracle.hpp"
#include "xml_check.hpp"

using namespace slicecheck;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;
std::string g_toy;
int g_failures = 0;

// Tolerances, pinned once.
constexpr double kTableCellTol = 0.001;   // report cells quoted to 3 decimals
constexpr double kAccuracyTol = 0.0005;   // accuracies quoted to 3 decimals
constexpr double kExactTol = 1e-12;       // "equal" for derived doubles
constexpr double kSumTol = 1e-9;          // probability vectors sum to 1

void report(int criterion, const std::string& name, bool pass, double seconds,
            const std::string& detail) {
  std::printf("criterion %d (%s): %s (%.2fs)%s%s\n", criterion, name.c_str(),
              pass ? "PASS" : "FAIL", seconds, detail.empty() ? "" : " — ", detail.c_str());
  if (!pass) ++g_failures;
}

void run_criterion(int criterion, const std::string& name, double budget_seconds,
                   const std::function<void(std::string&)>& body) {
  std::string detail;
  bool pass = true;
  auto start = Clock::now();
  try {
    body(detail);
    pass = detail.empty();
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (pass && budget_seconds > 0 && seconds > budget_seconds) {
    pass = false;
    detail = "over the " + std::to_string(budget_seconds) + "s budget";
  }
  report(criterion, name, pass, seconds, detail);
}

void expect_near(std::string& detail, const std::string& what, double got, double want,
                 double tol) {
  if (!detail.empty()) return;
  if (std::isnan(got) || std::fabs(got - want) > tol) {
    std::ostringstream msg;
    msg.precision(10);
    msg << what << ": got " << got << ", want " << want << " +/- " << tol;
    detail = msg.str();
  }
}

void expect(std::string& detail, bool condition, const std::string& what) {
  if (detail.empty() && !condition) detail = what;
}

// --- criterion 1: a pinned reference classification report ----------------

void criterion_table1(std::string& detail) {
  // Confusion counts consistent with the reference precision/recall/support
  // figures; closure against the marginals is asserted before use.
  const std::size_t nn = 538, ny = 534, yn = 186, yy = 758;
  expect(detail, nn + ny == 1072, "N support closure");
  expect(detail, yn + yy == 944, "Y support closure");
  expect(detail, nn + ny + yn + yy == 2016, "total closure");

  std::vector<std::string> gold, pred;
  auto add = [&](const char* g, const char* p, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      gold.emplace_back(g);
      pred.emplace_back(p);
    }
  };
  add("N", "N", nn);
  add("N", "Y", ny);
  add("Y", "N", yn);
  add("Y", "Y", yy);

  ClassificationReport r = classification_report(gold, pred);
  const ClassMetrics* n = r.find("N");
  const ClassMetrics* y = r.find("Y");
  expect(detail, n != nullptr && y != nullptr, "both classes reported");
  if (!detail.empty()) return;
  expect_near(detail, "N precision", n->precision, 0.743, kTableCellTol);
  expect_near(detail, "N recall", n->recall, 0.502, kTableCellTol);
  expect_near(detail, "N f1", n->f1, 0.599, kTableCellTol);
  expect(detail, n->support == 1072, "N support == 1072");
  expect_near(detail, "Y precision", y->precision, 0.587, kTableCellTol);
  expect_near(detail, "Y recall", y->recall, 0.803, kTableCellTol);
  expect_near(detail, "Y f1", y->f1, 0.678, kTableCellTol);
  expect(detail, y->support == 944, "Y support == 944");
  expect_near(detail, "macro precision", r.macro_avg.precision, 0.665, kTableCellTol);
  expect_near(detail, "macro recall", r.macro_avg.recall, 0.652, kTableCellTol);
  expect_near(detail, "macro f1", r.macro_avg.f1, 0.639, kTableCellTol);
  expect(detail, r.macro_avg.support == 2016, "macro support == 2016");
  expect_near(detail, "weighted precision", r.weighted_avg.precision, 0.670, kTableCellTol);
  expect_near(detail, "weighted recall", r.weighted_avg.recall, 0.643, kTableCellTol);
  expect_near(detail, "weighted f1", r.weighted_avg.f1, 0.636, kTableCellTol);
  expect(detail, r.weighted_avg.support == 2016, "weighted support == 2016");
}

// --- criterion 2: a pinned reference agreement split -----------------

SubmissionObject agreement_fixture(std::size_t full_total, std::size_t full_correct,
                                   std::size_t partial_total, std::size_t partial_correct) {
  std::vector<std::string> text, gold, a1, a2;
  std::vector<std::string> preds;
  auto add = [&](std::size_t count, bool agree, bool correct) {
    for (std::size_t i = 0; i < count; ++i) {
      text.push_back(agree ? "full row" : "partial row");
      gold.push_back("Y");
      a1.push_back("Y");
      a2.push_back(agree ? "Y" : "N");
      preds.push_back(correct ? "Y" : "N");
    }
  };
  add(full_correct, true, true);
  add(full_total - full_correct, true, false);
  add(partial_correct, false, true);
  add(partial_total - partial_correct, false, false);

  Table table({"T", "G", "A1", "A2"},
              {Column::from_strings(text), Column::from_strings(gold),
               Column::from_strings(a1), Column::from_strings(a2)});
  DatasetDescriptor d;
  d.name = "agreement";
  d.text_column = "T";
  d.gold_column = "G";
  d.label_domain = {"Y", "N"};
  d.annotator_groups["votes"] = {"A1", "A2"};
  return submit(table, d, preds, {{"Y", "Y"}, {"N", "N"}});
}

void criterion_table2(std::string& detail) {
  SubmissionObject sub = agreement_fixture(1431, 1004, 585, 292);
  AnalysisResult result = check_anno_agreement(sub, {"A1", "A2"});
  expect(detail, result.rows.size() == 2, "two slices");
  if (!detail.empty()) return;
  const PlotInfoRow& full = result.rows[0];
  const PlotInfoRow& partial = result.rows[1];
  expect(detail, full.slice == "full", "first slice is full agreement");
  expect(detail, full.total == 1431, "full total == 1431");
  expect(detail, full.total_correct == 1004, "full correct == 1004");
  expect_near(detail, "full accuracy", full.accuracy, 0.702, kAccuracyTol);
  expect(detail, partial.slice == "partial", "second slice is partial agreement");
  expect(detail, partial.total == 585, "partial total == 585");
  expect(detail, partial.total_correct == 292, "partial correct == 292");
  expect_near(detail, "partial accuracy", partial.accuracy, 0.499, kAccuracyTol);
}

// --- criterion 3: randomized agreement with a counting oracle -------------

void criterion_oracle(std::string& detail) {
  std::mt19937_64 rng(20260815);
  const std::vector<std::string> alphabet = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 1000 && detail.empty(); ++trial) {
    std::size_t n = 1 + rng() % 200;
    std::size_t k = 1 + rng() % 4;
    std::vector<std::string> gold(n), pred(n);
    for (std::size_t i = 0; i < n; ++i) {
      gold[i] = alphabet[rng() % k];
      pred[i] = alphabet[rng() % k];
    }
    ClassificationReport got = classification_report(gold, pred);
    oracle::Report want = oracle::report(gold, pred);
    expect(detail, got.labels == want.labels, "label sets agree");
    for (const std::string& label : want.labels) {
      const ClassMetrics* m = got.find(label);
      expect(detail, m != nullptr, "class " + label + " reported");
      if (!detail.empty()) break;
      const oracle::Row& w = want.per_class[label];
      expect_near(detail, label + " precision", m->precision, w.precision, kExactTol);
      expect_near(detail, label + " recall", m->recall, w.recall, kExactTol);
      expect_near(detail, label + " f1", m->f1, w.f1, kExactTol);
      expect(detail, m->support == w.support, label + " support");
    }
    expect_near(detail, "macro precision", got.macro_avg.precision, want.macro.precision,
                kExactTol);
    expect_near(detail, "macro recall", got.macro_avg.recall, want.macro.recall, kExactTol);
    expect_near(detail, "macro f1", got.macro_avg.f1, want.macro.f1, kExactTol);
    expect_near(detail, "weighted precision", got.weighted_avg.precision,
                want.weighted.precision, kExactTol);
    expect_near(detail, "weighted recall", got.weighted_avg.recall, want.weighted.recall,
                kExactTol);
    expect_near(detail, "weighted f1", got.weighted_avg.f1, want.weighted.f1, kExactTol);
    expect_near(detail, "accuracy", got.accuracy, want.accuracy, kExactTol);
    if (!detail.empty()) detail += " (trial " + std::to_string(trial) + ")";
  }
}

// --- criterion 4: preprocessing golden string + idempotence ---------------

void criterion_preprocess(std::string& detail) {
  NormalizationRules rules = default_rules();
  std::string input =
      "@username_1 Have you seen the video that @another_user made?"
      "  \xF0\x9F\x91\x80 \xF0\x9F\x94\xA5 \xF0\x9F\x92\xAF https://fakelink.io";
  std::string want =
      "USER have you seen the video that USER made? eyes fire hundred points HTML";
  std::string got = preprocess_text(input, rules);
  if (got != want) {
    detail = "golden mismatch: got \"" + got + "\"";
    return;
  }

  // 50 fuzz strings assembled from the fragments the normalizer cares about.
  const std::vector<std::string> fragments = {
      "@user",       "plain",           "WWW.CAPS.ORG",     "www.!",
      "a@b.org",     "#Hash",           "https://x.io",     "\xF0\x9F\x91\x80",
      "\xF0\x9F\x94\xA5\xF0\x9F\x94\xA5", "\xE2\x98\x80\xEF\xB8\x8F", "USER", "HTML",
      "http://a.io.", "\xF0\x9F\xAB\xA0", "@",               "@@double",
      "MiXeD",       "  ",              "www.a.b.c,",       "scheme+x://ok",
      "http://",     "e\xCC\x81",       "tab\there",        "x",
  };
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 50; ++i) {
    std::string text;
    std::size_t pieces = 1 + rng() % 8;
    for (std::size_t p = 0; p < pieces; ++p) {
      if (p > 0) text += rng() % 4 == 0 ? "  " : " ";
      text += fragments[rng() % fragments.size()];
    }
    std::string once = preprocess_text(text, rules);
    std::string twice = preprocess_text(once, rules);
    if (once != twice) {
      detail = "not idempotent for \"" + text + "\": \"" + once + "\" vs \"" + twice + "\"";
      return;
    }
  }
}

// --- criterion 5: slices partition the data on randomized fixtures --------

void criterion_partition(std::string& detail) {
  std::mt19937_64 rng(555);
  const std::vector<std::string> cats = {"red", "blue", "green", ""};
  const std::vector<std::string> functionalities = {
      "counter_x_nh", "derog_y_h", "ident_z_nh", "negate_p_h",   "target_q_nh", "phrase_r_h",
      "profanity_h",  "ref_s_h",   "slur_t_h",   "spell_u_h",    "threat_v_h",  "oddball_case",
      ""};
  const std::vector<std::string> words = {"finna", "bruh",  "hello", "weather",
                                          "oov1",  "oov2",  "the",   "zz"};
  DialectModel model;
  model.topics = {"t0", "t1"};
  model.vocab["finna"] = {0.9, 0.1};
  model.vocab["bruh"] = {0.7, 0.3};
  model.vocab["hello"] = {0.3, 0.7};
  model.vocab["weather"] = {0.1, 0.9};
  model.vocab["the"] = {0.5, 0.5};
  model.priors = {0.5, 0.5};

  for (int trial = 0; trial < 100 && detail.empty(); ++trial) {
    bool with_cat = trial % 2 == 0;
    std::size_t n = 1 + rng() % 60;
    std::vector<std::string> text(n), gold(n), cat(n), a1(n), a2(n), a3(n);
    std::vector<std::string> off(n), slur(n), nom(n), dist(n), functionality(n), preds(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t len = 1 + rng() % 6;
      for (std::size_t w = 0; w < len; ++w) {
        if (w > 0) text[i] += " ";
        text[i] += words[rng() % words.size()];
      }
      gold[i] = rng() % 2 ? "Y" : "N";
      cat[i] = cats[rng() % cats.size()];
      a1[i] = rng() % 2 ? "Y" : "N";
      a2[i] = rng() % 2 ? "Y" : "N";
      a3[i] = rng() % 5 == 0 ? "" : (rng() % 2 ? "Y" : "N");
      off[i] = gold[i];
      slur[i] = rng() % 2 ? "Y" : "N";
      nom[i] = rng() % 2 ? "Y" : "N";
      dist[i] = rng() % 2 ? "Y" : "N";
      functionality[i] = functionalities[rng() % functionalities.size()];
      preds[i] = rng() % 2 ? "Y" : "N";
    }
    std::vector<std::string> names = {"T", "G", "A1", "A2", "A3",
                                      "Off", "Slur", "Nom", "Dist", "functionality"};
    std::vector<Column> columns = {
        Column::from_strings(text), Column::from_strings(gold),  Column::from_strings(a1),
        Column::from_strings(a2),   Column::from_strings(a3),    Column::from_strings(off),
        Column::from_strings(slur), Column::from_strings(nom),   Column::from_strings(dist),
        Column::from_strings(functionality)};
    if (with_cat) {
      names.push_back("Cat");
      columns.push_back(Column::from_strings(cat));
    }
    DatasetDescriptor d;
    d.name = "fixture";
    d.text_column = "T";
    d.gold_column = "G";
    d.label_domain = {"Y", "N"};
    SubmissionObject sub =
        submit(Table(names, columns), d, preds, {{"Y", "Y"}, {"N", "N"}});

    std::vector<std::pair<std::string, AnalysisResult>> results;
    if (with_cat) results.emplace_back("analyze_on", analyze_on(sub, "Cat"));
    results.emplace_back("agreement", check_anno_agreement(sub, {"A1", "A2", "A3"}));
    results.emplace_back("substring", check_substring(sub, "finna"));
    results.emplace_back("length words", str_len_analysis(sub, LengthUnit::Words, 4));
    results.emplace_back("length chars", str_len_analysis(sub, LengthUnit::Characters, 3));
    results.emplace_back("aave", aave_analysis(sub, model, 0.5));
    results.emplace_back("cold", cold_analyze(sub));
    results.emplace_back("hatecheck", hatecheck_analyze(sub));

    for (const auto& [kind, result] : results) {
      std::size_t total = 0;
      for (const PlotInfoRow& row : result.rows) {
        total += row.total;
        const ClassificationReport* r = result.find_report(row.slice);
        expect(detail, r != nullptr, kind + ": report for slice " + row.slice);
        if (!detail.empty()) break;
        if (!row.empty_slice) {
          expect_near(detail, kind + " accuracy for " + row.slice, r->accuracy, row.accuracy,
                      kExactTol);
        }
        expect(detail,
               row.empty_slice ? row.total == 0
                               : row.total_correct <= row.total,
               kind + ": sane counts for " + row.slice);
      }
      expect(detail, total == n,
             kind + ": slice totals sum to " + std::to_string(n) + ", got " +
                 std::to_string(total));
      if (!detail.empty()) break;
    }
    if (!detail.empty()) detail += " (trial " + std::to_string(trial) + ")";
  }
}

// --- criterion 6: dialect scorer ------------------------------------------

void criterion_dialect(std::string& detail) {
  DialectModel toy;
  toy.topics = {"t0", "t1", "t2", "t3"};
  toy.vocab["w1"] = {0.8, 0.2, 0.0, 0.0};
  toy.vocab["w2"] = {0.2, 0.8, 0.0, 0.0};
  toy.priors = {0.25, 0.25, 0.25, 0.25};
  std::vector<std::string> message = {"w1", "w2"};
  DialectScore score = score_message(message, toy);
  expect(detail, score.proportions.size() == 4, "four topics scored");
  if (!detail.empty()) return;
  expect(detail, score.proportions[0] == 0.5, "topic 0 is exactly 0.5");
  expect(detail, score.proportions[1] == 0.5, "topic 1 is exactly 0.5");
  expect(detail, score.proportions[2] == 0.0, "topic 2 is exactly 0");
  expect(detail, score.proportions[3] == 0.0, "topic 3 is exactly 0");

  std::mt19937_64 rng(66);
  std::uniform_real_distribution<double> unit(0.001, 1.0);
  for (int trial = 0; trial < 500 && detail.empty(); ++trial) {
    std::size_t topics = 2 + rng() % 5;
    std::size_t vocab_size = 1 + rng() % 8;
    DialectModel model;
    for (std::size_t t = 0; t < topics; ++t) model.topics.push_back("t" + std::to_string(t));
    model.priors.assign(topics, 1.0 / static_cast<double>(topics));
    std::vector<std::string> vocab;
    for (std::size_t w = 0; w < vocab_size; ++w) {
      std::string word = "w" + std::to_string(w);
      vocab.push_back(word);
      std::vector<double> lik(topics);
      for (std::size_t t = 0; t < topics; ++t) lik[t] = unit(rng);
      model.vocab[word] = lik;
    }
    std::size_t len = 1 + rng() % 10;
    std::vector<std::string> tokens(len);
    for (std::size_t i = 0; i < len; ++i) {
      tokens[i] = rng() % 5 == 0 ? "oov" : vocab[rng() % vocab.size()];
    }
    DialectScore s = score_message(tokens, model);
    double sum = 0;
    for (double p : s.proportions) {
      expect(detail, p >= 0.0, "proportions are non-negative");
      sum += p;
    }
    expect_near(detail, "proportions sum", sum, 1.0, kSumTol);

    // Permutation invariance: reverse order, same mean.
    std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
    DialectScore rev = score_message(reversed, model);
    for (std::size_t t = 0; t < topics; ++t) {
      expect_near(detail, "permutation invariance", rev.proportions[t], s.proportions[t],
                  kExactTol);
    }
    // Duplication invariance: the message twice, same mean.
    std::vector<std::string> doubled = tokens;
    doubled.insert(doubled.end(), tokens.begin(), tokens.end());
    DialectScore dup = score_message(doubled, model);
    for (std::size_t t = 0; t < topics; ++t) {
      expect_near(detail, "duplication invariance", dup.proportions[t], s.proportions[t],
                  kExactTol);
    }
    if (!detail.empty()) detail += " (trial " + std::to_string(trial) + ")";
  }
}

// --- criterion 7: the HateCheck category shape -----------------------------

void criterion_hatecheck(std::string& detail) {
  DatasetDescriptor d = builtin_descriptors().at("hatecheck");
  LoadOptions options;
  options.data_path = g_toy + "/hatecheck_toy.csv";
  Table table = load_dataset(d, options);
  SubmissionObject sub = submit(table, d, load_predictions(g_toy + "/hc_preds_a.csv"),
                                {{"LABEL_0", "non-hateful"}, {"LABEL_1", "hateful"}});
  AnalysisResult result = hatecheck_analyze(sub);
  const std::vector<std::string> want = {
      "counter (nh)", "derogation (h)",     "identity (nh)",  "negation",
      "nonhateful-abuse (nh)", "phrasing (h)", "profanity",    "pronoun-references (h)",
      "slurs",        "spelling changes (h)", "threats (h)"};
  expect(detail, result.rows.size() == want.size(), "11 category slices");
  for (std::size_t i = 0; i < want.size() && detail.empty(); ++i) {
    expect(detail, result.rows[i].slice == want[i],
           "slice " + std::to_string(i) + " is '" + want[i] + "', got '" +
               result.rows[i].slice + "'");
  }
  if (!detail.empty()) return;
  // Single-label slices still report both labels, the absent one with
  // support 0 and zeroed metrics.
  for (const std::string& pure : {"derogation (h)", "threats (h)"}) {
    const ClassificationReport* r = result.find_report(pure);
    expect(detail, r != nullptr, "report for " + pure);
    if (!detail.empty()) return;
    const ClassMetrics* absent = r->find("non-hateful");
    expect(detail, absent != nullptr, pure + " reports the non-hateful row");
    if (!detail.empty()) return;
    expect(detail, absent->support == 0, pure + " non-hateful support is 0");
    expect(detail, absent->precision == 0.0 && absent->recall == 0.0 && absent->f1 == 0.0,
           pure + " non-hateful metrics are 0.000");
  }
  for (const std::string& pure_nh : {"counter (nh)", "identity (nh)"}) {
    const ClassificationReport* r = result.find_report(pure_nh);
    expect(detail, r != nullptr && r->find("hateful") != nullptr &&
                       r->find("hateful")->support == 0,
           pure_nh + " reports hateful with support 0");
  }
}

// --- criterion 8: plot structure -------------------------------------------

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

// The text of every class="pct" element, in document order.
std::vector<std::string> percent_labels(const std::string& svg) {
  std::vector<std::string> labels;
  const std::string marker = "class=\"pct\">";
  for (std::size_t pos = svg.find(marker); pos != std::string::npos;
       pos = svg.find(marker, pos + marker.size())) {
    std::size_t start = pos + marker.size();
    std::size_t end = svg.find('<', start);
    if (end == std::string::npos) break;
    labels.push_back(svg.substr(start, end - start));
  }
  return labels;
}

std::string expected_pct(double accuracy) {
  return std::to_string(std::lround(accuracy * 100)) + "%";
}

void criterion_plots(std::string& detail) {
  DatasetDescriptor d = builtin_descriptors().at("hatecheck");
  LoadOptions options;
  options.data_path = g_toy + "/hatecheck_toy.csv";
  Table table = load_dataset(d, options);
  SubmissionObject sub_a = submit(table, d, load_predictions(g_toy + "/hc_preds_a.csv"),
                                  {{"LABEL_0", "non-hateful"}, {"LABEL_1", "hateful"}});
  SubmissionObject sub_b = submit(table, d, load_predictions(g_toy + "/hc_preds_b.csv"),
                                  {{"LABEL_0", "non-hateful"}, {"LABEL_1", "hateful"}});

  AnalysisResult categories = hatecheck_analyze(sub_a);
  std::string bar = render_bar_chart(categories);
  std::string why;
  expect(detail, xmlcheck::well_formed(bar, &why), "bar chart xml: " + why);
  expect(detail, count_occurrences(bar, "class=\"bar\"") == categories.rows.size(),
         "one bar per slice");
  std::vector<std::string> bar_labels = percent_labels(bar);
  expect(detail, bar_labels.size() == categories.rows.size(), "one percent label per slice");
  for (std::size_t i = 0; i < categories.rows.size() && detail.empty(); ++i) {
    expect(detail, bar_labels[i] == expected_pct(categories.rows[i].accuracy),
           "bar label " + std::to_string(i) + " is " +
               expected_pct(categories.rows[i].accuracy) + ", got " + bar_labels[i]);
  }

  AnalysisResult lengths = str_len_analysis(sub_a, LengthUnit::Words, 5);
  std::string hist = render_length_histogram(lengths);
  expect(detail, xmlcheck::well_formed(hist, &why), "histogram xml: " + why);
  expect(detail, count_occurrences(hist, "class=\"bar\"") == lengths.rows.size(),
         "one histogram bar per bin");
  std::vector<std::string> hist_labels = percent_labels(hist);
  expect(detail, hist_labels.size() == lengths.rows.size(), "one percent label per bin");
  for (std::size_t i = 0; i < lengths.rows.size() && detail.empty(); ++i) {
    expect(detail, hist_labels[i] == expected_pct(lengths.rows[i].accuracy),
           "histogram label " + std::to_string(i) + " mismatched");
  }

  ComparisonResult cmp = compare_models(sub_a, sub_b, "target_ident");
  std::string grouped = render_grouped_bars(cmp);
  expect(detail, xmlcheck::well_formed(grouped, &why), "grouped bars xml: " + why);
  expect(detail, count_occurrences(grouped, "class=\"bar\"") == 2 * cmp.rows.size(),
         "two bars per compared slice");
  std::vector<std::string> pair_labels = percent_labels(grouped);
  expect(detail, pair_labels.size() == 2 * cmp.rows.size(),
         "two percent labels per compared slice");
  for (std::size_t i = 0; i < cmp.rows.size() && detail.empty(); ++i) {
    expect(detail, pair_labels[2 * i] == expected_pct(cmp.rows[i].accuracy_a),
           "grouped label for model A on slice " + cmp.rows[i].slice + " mismatched");
    expect(detail, pair_labels[2 * i + 1] == expected_pct(cmp.rows[i].accuracy_b),
           "grouped label for model B on slice " + cmp.rows[i].slice + " mismatched");
  }
}

// --- criterion 9: CLI parity + byte-identical reruns ------------------------

struct Command {
  std::string name;
  std::vector<std::string> args;
  std::vector<std::string> outputs;  // file names produced under the run dir
};

std::string shell_quote(const std::string& text) {
  std::string quoted = "'";
  for (char c : text) {
    if (c == '\'') {
      quoted += "'\\''";
    } else {
      quoted += c;
    }
  }
  quoted += "'";
  return quoted;
}

bool run_command(const std::vector<std::string>& args, std::string* combined_output) {
  std::string command = shell_quote(g_cli);
  for (const std::string& arg : args) command += " " + shell_quote(arg);
  command += " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return false;
  char buffer[4096];
  combined_output->clear();
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    combined_output->append(buffer, got);
  }
  return pclose(pipe) == 0;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void criterion_cli(std::string& detail) {
  const std::string toy = g_toy;
  // One invocation per documented workflow, on the bundled toy data.
  std::vector<Command> workflows = {
      {"cold analyze_on Cat",
       {"analyze", "--schema", "cold", "--data", toy + "/cold_toy.csv", "--predictions",
        toy + "/cold_preds.csv", "--map", "LABEL_0=N", "--map", "LABEL_1=Y", "--on",
        "column:Cat", "--plot", "cat.svg", "--report", "cat_report.csv", "--plot-info",
        "cat_info.csv"},
       {"cat.svg", "cat_report.csv", "cat_info.csv"}},
      {"cold annotator agreement with examples",
       {"analyze", "--schema", "cold", "--data", toy + "/cold_toy.csv", "--predictions",
        toy + "/cold_preds.csv", "--map", "LABEL_0=N", "--map", "LABEL_1=Y", "--on",
        "anno-agreement:Off1,Off2,Off3", "--show-examples", "--seed", "1729"},
       {}},
      {"hatecheck analyze_on target_ident",
       {"analyze", "--schema", "hatecheck", "--data", toy + "/hatecheck_toy.csv",
        "--predictions", toy + "/hc_preds_a.csv", "--map", "LABEL_0=non-hateful", "--map",
        "LABEL_1=hateful", "--on", "column:target_ident"},
       {}},
      {"hatecheck categories",
       {"analyze", "--schema", "hatecheck", "--data", toy + "/hatecheck_toy.csv",
        "--predictions", toy + "/hc_preds_a.csv", "--map", "LABEL_0=non-hateful", "--map",
        "LABEL_1=hateful", "--on", "hatecheck-cat", "--plot", "hc.svg", "--report",
        "hc_report.csv", "--plot-info", "hc_info.csv"},
       {"hc.svg", "hc_report.csv", "hc_info.csv"}},
      {"olid prediction-to-gold map with batching",
       {"analyze", "--schema", "olid", "--data", toy + "/olid_toy.csv", "--predictions",
        toy + "/olid_preds.jsonl", "--map", "1.0=OFF", "--map", "0.0=NOT", "--on",
        "column:label", "--batch-size", "64", "--batch-index", "0"},
       {}},
      {"olid gold-to-prediction map",
       {"analyze", "--schema", "olid", "--data", toy + "/olid_toy.csv", "--predictions",
        toy + "/olid_preds.csv", "--map", "OFF=1.0", "--map", "NOT=0.0", "--on",
        "column:label"},
       {}},
      {"olid substring female",
       {"analyze", "--schema", "olid", "--data", toy + "/olid_toy.csv", "--predictions",
        toy + "/olid_preds.csv", "--map", "1.0=OFF", "--map", "0.0=NOT", "--on",
        "substring:female"},
       {}},
      {"olid aave scores",
       {"analyze", "--schema", "olid", "--data", toy + "/olid_toy.csv", "--predictions",
        toy + "/olid_preds.csv", "--map", "1.0=OFF", "--map", "0.0=NOT", "--on", "aave:0.5",
        "--dialect-model", toy + "/dialect_toy.tsv"},
       {}},
      {"olid length histogram",
       {"analyze", "--schema", "olid", "--data", toy + "/olid_toy.csv", "--predictions",
        toy + "/olid_preds.csv", "--map", "1.0=OFF", "--map", "0.0=NOT", "--on",
        "length:words,4", "--plot", "len.svg"},
       {"len.svg"}},
      {"hatecheck model comparison",
       {"compare", "--schema", "hatecheck", "--data", toy + "/hatecheck_toy.csv",
        "--predictions-a", toy + "/hc_preds_a.csv", "--predictions-b", toy + "/hc_preds_b.csv",
        "--map-a", "LABEL_0=non-hateful", "--map-a", "LABEL_1=hateful", "--on",
        "column:target_ident", "--out", "cmp.csv", "--plot", "cmp.svg"},
       {"cmp.csv", "cmp.svg"}},
      {"preprocess column",
       {"preprocess", "--data", toy + "/olid_toy.csv", "--column", "Text", "--output",
        "pp.csv"},
       {"pp.csv"}},
  };

  fs::path base = fs::temp_directory_path() / "slicecheck_acceptance_cli";
  fs::remove_all(base);
  for (const Command& workflow : workflows) {
    if (!detail.empty()) return;
    std::vector<std::string> captured(2);
    std::vector<fs::path> dirs = {base / "run_a", base / "run_b"};
    for (int run = 0; run < 2; ++run) {
      fs::create_directories(dirs[run]);
      std::vector<std::string> args = workflow.args;
      // Output paths are relative names; anchor them in this run's dir.
      for (std::string& arg : args) {
        for (const std::string& output : workflow.outputs) {
          if (arg == output) arg = (dirs[run] / output).string();
        }
      }
      if (!run_command(args, &captured[run])) {
        detail = workflow.name + ": exited nonzero: " + captured[run].substr(0, 200);
        return;
      }
    }
    expect(detail, captured[0] == captured[1],
           workflow.name + ": reruns print identical bytes");
    for (const std::string& output : workflow.outputs) {
      std::string a = slurp(dirs[0] / output);
      std::string b = slurp(dirs[1] / output);
      expect(detail, !a.empty(), workflow.name + ": " + output + " written");
      expect(detail, a == b, workflow.name + ": " + output + " identical across reruns");
    }
    fs::remove_all(base);
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <cli-binary> <toy-data-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_toy = argv[2];

  auto suite_start = Clock::now();
  run_criterion(1, "reference classification report", 1.0, criterion_table1);
  run_criterion(2, "reference agreement split", 1.0, criterion_table2);
  run_criterion(3, "metrics oracle", 10.0, criterion_oracle);
  run_criterion(4, "preprocessing golden + idempotence", 0.0, criterion_preprocess);
  run_criterion(5, "slice partition property", 0.0, criterion_partition);
  run_criterion(6, "dialect scorer", 0.0, criterion_dialect);
  run_criterion(7, "hatecheck category shape", 0.0, criterion_hatecheck);
  run_criterion(8, "plot structure", 0.0, criterion_plots);
  run_criterion(9, "cli parity + determinism", 0.0, criterion_cli);
  double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
  std::printf("total: %.2fs, %d failure%s\n", total, g_failures, g_failures == 1 ? "" : "s");
  if (total > 30.0) {
    std::printf("FAIL: suite exceeded the 30s budget\n");
    return 1;
  }
  return g_failures == 0 ? 0 : 1;
}
