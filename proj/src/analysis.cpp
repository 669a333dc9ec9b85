#include "slicecheck/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "slicecheck/error.hpp"
#include "slicecheck/preprocess.hpp"

namespace slicecheck {

namespace {

std::string ascii_lower(const std::string& text) {
  std::string out = text;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

// The engine shared by every analysis: one PlotInfoRow and one report per
// group, plus the overall report. Examples are sampled from a child
// generator seeded per slice, so results do not depend on slice order.
AnalysisResult build_result(const SubmissionObject& sub, const std::string& dimension,
                            const std::vector<Group>& groups, const AnalysisOptions& opts) {
  AnalysisResult result;
  result.dimension = dimension;
  for (std::size_t index = 0; index < groups.size(); ++index) {
    const Group& group = groups[index];
    std::vector<std::string> gold, mapped;
    gold.reserve(group.rows.size());
    mapped.reserve(group.rows.size());
    for (std::size_t row : group.rows) {
      gold.push_back(sub.gold.at(row));
      mapped.push_back(sub.mapped.at(row));
    }
    PlotInfoRow row;
    row.slice = group.key;
    row.total = group.rows.size();
    for (std::size_t i = 0; i < gold.size(); ++i) {
      if (gold[i] == mapped[i]) ++row.total_correct;
    }
    if (row.total == 0) {
      row.empty_slice = true;
    } else {
      row.accuracy = static_cast<double>(row.total_correct) / static_cast<double>(row.total);
    }
    if (opts.show_examples) {
      std::mt19937_64 rng(opts.seed + index);
      row.example = sample_error_example(sub, group.rows, rng);
    }
    result.reports.emplace_back(group.key,
                                classification_report(gold, mapped, &sub.gold_domain));
    result.rows.push_back(std::move(row));
  }
  result.overall = classification_report(sub.gold, sub.mapped, &sub.gold_domain);
  return result;
}

std::string require_text(const SubmissionObject& sub, std::size_t row) {
  return sub.table.text_at(row, sub.descriptor.text_column);
}

}  // namespace

const ClassificationReport* AnalysisResult::find_report(const std::string& slice) const {
  for (const auto& [label, report] : reports) {
    if (label == slice) return &report;
  }
  return nullptr;
}

AnalysisResult analyze_on(const SubmissionObject& sub, const std::string& column,
                          const AnalysisOptions& opts) {
  if (!sub.table.has_column(column)) {
    raise(ErrorCode::Column, "no column named '" + column + "'");
  }
  if (sub.table.column(column).kind() == CellKind::Real) {
    raise(ErrorCode::Kind, "column '" + column +
                               "' is real-valued, not categorical; for lengths use the length "
                               "analysis instead");
  }
  return build_result(sub, column, group_rows(sub.table, column), opts);
}

AnalysisResult check_anno_agreement(const SubmissionObject& sub,
                                    const std::vector<std::string>& annotator_columns,
                                    const AnalysisOptions& opts) {
  if (annotator_columns.size() < 2) {
    raise(ErrorCode::Argument, "annotator agreement needs at least 2 columns");
  }
  for (const std::string& column : annotator_columns) {
    if (!sub.table.has_column(column)) {
      raise(ErrorCode::Column, "no column named '" + column + "'");
    }
  }
  Group full{"full", {}};
  Group partial{"partial", {}};
  std::size_t rows_missing = 0;
  for (std::size_t row = 0; row < sub.table.row_count(); ++row) {
    bool any_missing = false;
    bool agree = true;
    std::string first;
    for (std::size_t i = 0; i < annotator_columns.size(); ++i) {
      const Cell& cell = sub.table.at(row, annotator_columns[i]);
      if (is_missing(cell)) {
        any_missing = true;
        break;
      }
      std::string value = cell_to_string(cell);
      if (i == 0) {
        first = value;
      } else if (value != first) {
        agree = false;
      }
    }
    if (any_missing) {
      ++rows_missing;
      partial.rows.push_back(row);
    } else if (agree) {
      full.rows.push_back(row);
    } else {
      partial.rows.push_back(row);
    }
  }
  AnalysisResult result =
      build_result(sub, "annotator agreement", {std::move(full), std::move(partial)}, opts);
  if (rows_missing > 0) {
    result.diagnostics["rows_with_missing_annotator_labels"] = std::to_string(rows_missing);
  }
  return result;
}

AnalysisResult check_substring(const SubmissionObject& sub, const std::string& substring,
                               const AnalysisOptions& opts, bool ignore_case) {
  if (substring.empty()) raise(ErrorCode::Argument, "substring must not be empty");
  std::string needle = ignore_case ? ascii_lower(substring) : substring;
  Group contains{"contains", {}};
  Group not_contains{"not-contains", {}};
  for (std::size_t row = 0; row < sub.table.row_count(); ++row) {
    std::string text = require_text(sub, row);
    if (ignore_case) text = ascii_lower(text);
    if (text.find(needle) != std::string::npos) {
      contains.rows.push_back(row);
    } else {
      not_contains.rows.push_back(row);
    }
  }
  return build_result(sub, "substring '" + substring + "'",
                      {std::move(contains), std::move(not_contains)}, opts);
}

AnalysisResult str_len_analysis(const SubmissionObject& sub, LengthUnit unit, std::size_t bins,
                                const AnalysisOptions& opts) {
  if (bins == 0) raise(ErrorCode::Argument, "bin count must be at least 1");
  std::string dimension =
      unit == LengthUnit::Words ? "text length (words)" : "text length (characters)";
  std::vector<double> lengths;
  lengths.reserve(sub.table.row_count());
  for (std::size_t row = 0; row < sub.table.row_count(); ++row) {
    std::string text = require_text(sub, row);
    lengths.push_back(unit == LengthUnit::Words ? static_cast<double>(tokenize(text).size())
                                                : static_cast<double>(text.size()));
  }
  if (lengths.empty()) return build_result(sub, dimension, {}, opts);

  double lo = *std::min_element(lengths.begin(), lengths.end());
  double hi = *std::max_element(lengths.begin(), lengths.end());
  if (hi <= lo) bins = 1;  // zero-width range: a single bin holds everything
  double width = (hi - lo) / static_cast<double>(bins);

  std::vector<Group> groups(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    double from = lo + width * static_cast<double>(b);
    double to = b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1);
    groups[b].key = format_number(from) + "–" + format_number(to);
  }
  for (std::size_t row = 0; row < lengths.size(); ++row) {
    std::size_t b = 0;
    if (width > 0) {
      b = static_cast<std::size_t>((lengths[row] - lo) / width);
      if (b >= bins) b = bins - 1;  // the max value belongs to the last bin
    }
    groups[b].rows.push_back(row);
  }
  return build_result(sub, dimension, groups, opts);
}

AnalysisResult aave_analysis(const SubmissionObject& sub, const DialectModel& model,
                             double threshold, const AnalysisOptions& opts) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    raise(ErrorCode::Argument, "threshold must lie strictly between 0 and 1");
  }
  Group high{"score >= " + format_number(threshold), {}};
  Group low{"score < " + format_number(threshold), {}};
  Group no_evidence{"no-evidence", {}};
  std::size_t scored = 0;
  for (std::size_t row = 0; row < sub.table.row_count(); ++row) {
    std::vector<std::string> tokens = tokenize(require_text(sub, row));
    DialectScore score = score_message(tokens, model);
    if (score.uninformative) {
      no_evidence.rows.push_back(row);
      continue;
    }
    ++scored;
    if (score.proportions[0] >= threshold) {
      high.rows.push_back(row);
    } else {
      low.rows.push_back(row);
    }
  }
  std::vector<Group> groups;
  if (scored > 0) {
    groups.push_back(std::move(high));
    groups.push_back(std::move(low));
  }
  if (!no_evidence.rows.empty()) groups.push_back(std::move(no_evidence));
  return build_result(sub, "aave score", groups, opts);
}

std::string cold_category(const std::string& off, const std::string& slur, const std::string& nom,
                          const std::string& dist) {
  for (const std::string* value : {&off, &slur, &nom, &dist}) {
    if (*value != "Y" && *value != "N") {
      raise(ErrorCode::Domain, "category labels must be Y or N, got '" + *value + "'");
    }
  }
  if (off == "N" && slur == "Y") return "reclaimed";
  if (off == "Y" && slur == "Y") return "off-slur";
  if (off == "Y" && nom == "Y") return "off-nom";
  return "Off=" + off + "|Slur=" + slur + "|Nom=" + nom + "|Dist=" + dist;
}

AnalysisResult cold_analyze(const SubmissionObject& sub, const AnalysisOptions& opts) {
  if (sub.table.has_column("Cat")) return analyze_on(sub, "Cat", opts);
  for (const char* column : {"Off", "Slur", "Nom", "Dist"}) {
    if (!sub.table.has_column(column)) {
      raise(ErrorCode::Schema,
            "category analysis needs a Cat column or the Off/Slur/Nom/Dist columns; missing "
            "column " +
                std::string(column));
    }
  }
  std::vector<Group> groups;
  std::map<std::string, std::size_t> index;
  for (std::size_t row = 0; row < sub.table.row_count(); ++row) {
    std::string category =
        cold_category(sub.table.text_at(row, "Off"), sub.table.text_at(row, "Slur"),
                      sub.table.text_at(row, "Nom"), sub.table.text_at(row, "Dist"));
    auto [it, inserted] = index.emplace(category, groups.size());
    if (inserted) groups.push_back(Group{category, {}});
    groups[it->second].rows.push_back(row);
  }
  return build_result(sub, "cold category", groups, opts);
}

HateCheckCategory hatecheck_category(const std::string& functionality) {
  static const std::map<std::string, std::string> display = {
      {"counter", "counter"},        {"derog", "derogation"},
      {"ident", "identity"},         {"negate", "negation"},
      {"target", "nonhateful-abuse"}, {"phrase", "phrasing"},
      {"profanity", "profanity"},    {"ref", "pronoun-references"},
      {"slur", "slurs"},             {"spell", "spelling changes"},
      {"threat", "threats"},
  };
  std::string prefix = functionality.substr(0, functionality.find('_'));
  auto it = display.find(prefix);
  return {it == display.end() ? prefix : it->second, prefix};
}

AnalysisResult hatecheck_analyze(const SubmissionObject& sub, const AnalysisOptions& opts) {
  if (!sub.table.has_column("functionality")) {
    raise(ErrorCode::Schema, "missing column functionality");
  }
  // Categories in alphabetical order, matching the canonical category list.
  std::map<std::string, std::vector<std::size_t>> by_category;
  for (std::size_t row = 0; row < sub.table.row_count(); ++row) {
    const Cell& cell = sub.table.at(row, "functionality");
    std::string category =
        is_missing(cell) ? kMissingKey : hatecheck_category(cell_to_string(cell)).category;
    by_category[category].push_back(row);
  }
  std::vector<Group> groups;
  for (auto& [category, rows] : by_category) {
    bool all_hateful = true;
    bool all_nonhateful = true;
    for (std::size_t row : rows) {
      if (sub.gold.at(row) == "hateful") {
        all_nonhateful = false;
      } else if (sub.gold.at(row) == "non-hateful") {
        all_hateful = false;
      } else {
        all_hateful = false;
        all_nonhateful = false;
      }
    }
    std::string label = category;
    if (all_hateful && !rows.empty()) {
      label += " (h)";
    } else if (all_nonhateful && !rows.empty()) {
      label += " (nh)";
    }
    groups.push_back(Group{std::move(label), std::move(rows)});
  }
  return build_result(sub, "category", groups, opts);
}

ComparisonResult compare_models(const SubmissionObject& sub_a, const SubmissionObject& sub_b,
                                const std::string& column, const AnalysisOptions& opts) {
  if (sub_a.table.row_count() != sub_b.table.row_count()) {
    raise(ErrorCode::Alignment,
          "submissions cover different row counts: " + std::to_string(sub_a.table.row_count()) +
              " vs " + std::to_string(sub_b.table.row_count()));
  }
  for (std::size_t row = 0; row < sub_a.gold.size(); ++row) {
    if (sub_a.gold[row] != sub_b.gold[row]) {
      raise(ErrorCode::Alignment, "gold labels differ at row " + std::to_string(row + 1) + ": '" +
                                      sub_a.gold[row] + "' vs '" + sub_b.gold[row] + "'");
    }
  }
  ComparisonResult comparison;
  comparison.dimension = column;
  comparison.result_a = analyze_on(sub_a, column, opts);
  comparison.result_b = analyze_on(sub_b, column, opts);
  // Identical gold data means identical slices; keep model A's order.
  for (std::size_t i = 0; i < comparison.result_a.rows.size(); ++i) {
    const PlotInfoRow& a = comparison.result_a.rows[i];
    const PlotInfoRow& b = comparison.result_b.rows.at(i);
    if (a.slice != b.slice) {
      raise(ErrorCode::Alignment, "slice mismatch: '" + a.slice + "' vs '" + b.slice + "'");
    }
    ComparisonRow row;
    row.slice = a.slice;
    row.total = a.total;
    row.correct_a = a.total_correct;
    row.correct_b = b.total_correct;
    row.accuracy_a = a.accuracy;
    row.accuracy_b = b.accuracy;
    row.delta = a.accuracy - b.accuracy;
    row.empty_slice = a.empty_slice;
    comparison.rows.push_back(std::move(row));
  }
  return comparison;
}

std::optional<ExampleRef> sample_error_example(const SubmissionObject& sub,
                                               std::span<const std::size_t> rows,
                                               std::mt19937_64& rng) {
  std::vector<std::size_t> wrong;
  for (std::size_t row : rows) {
    if (sub.gold.at(row) != sub.mapped.at(row)) wrong.push_back(row);
  }
  if (wrong.empty()) return std::nullopt;
  std::size_t pick = wrong[static_cast<std::size_t>(rng() % wrong.size())];
  ExampleRef example;
  example.text = sub.table.text_at(pick, sub.descriptor.text_column);
  example.predicted = sub.mapped.at(pick);
  example.gold = sub.gold.at(pick);
  return example;
}

}  // namespace slicecheck
