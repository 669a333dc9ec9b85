#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slicecheck/dialect.hpp"
#include "slicecheck/metrics.hpp"
#include "slicecheck/submission.hpp"

namespace slicecheck {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct ExampleRef {
  std::string text;
  std::string predicted;  // mapped prediction, in the gold domain
  std::string gold;
};

struct PlotInfoRow {
  std::string slice;
  std::size_t total = 0;
  std::size_t total_correct = 0;
  double accuracy = 0.0;  // total_correct / total; 0 with empty_slice set when total is 0
  bool empty_slice = false;
  std::optional<ExampleRef> example;
};

struct AnalysisOptions {
  // Off by default so offensive text is never shown unless asked for.
  bool show_examples = false;
  std::uint64_t seed = kDefaultSeed;
};

struct AnalysisResult {
  std::string dimension;
  std::vector<PlotInfoRow> rows;
  // Slice label -> report, in row order.
  std::vector<std::pair<std::string, ClassificationReport>> reports;
  ClassificationReport overall;
  // Analysis-specific tallies, e.g. rows with missing annotator labels.
  std::map<std::string, std::string> diagnostics;

  const ClassificationReport* find_report(const std::string& slice) const;
};

// Slice on a categorical column (groups ordered by first appearance,
// missing cells under "<missing>"). Real-valued columns are a kind error
// pointing at the length analysis.
AnalysisResult analyze_on(const SubmissionObject& sub, const std::string& column,
                          const AnalysisOptions& opts = {});

// Slices `full` (all annotators gave the same label) vs `partial`; both
// rows always present. Rows with a missing annotator label count as
// `partial` and are tallied in diagnostics.
AnalysisResult check_anno_agreement(const SubmissionObject& sub,
                                    const std::vector<std::string>& annotator_columns,
                                    const AnalysisOptions& opts = {});

// Slices `contains` / `not-contains` by literal match on the text column.
AnalysisResult check_substring(const SubmissionObject& sub, const std::string& substring,
                               const AnalysisOptions& opts = {}, bool ignore_case = false);

enum class LengthUnit { Characters, Words };

// Equal-width length bins over [min, max], the max value landing in the
// last bin; every bin is a slice labeled "lo–hi", empty bins included.
// A zero-width range (e.g. all texts empty) degenerates to a single bin.
AnalysisResult str_len_analysis(const SubmissionObject& sub, LengthUnit unit, std::size_t bins,
                                const AnalysisOptions& opts = {});

// Slices rows by the topic-0 proportion of score_message over the row's
// tokens: "score >= t" / "score < t" when any row has in-vocabulary
// evidence, plus "no-evidence" when any row has none.
AnalysisResult aave_analysis(const SubmissionObject& sub, const DialectModel& model,
                             double threshold = 0.5, const AnalysisOptions& opts = {});

// Category of a row from the four binary majority-vote labels, each Y or N:
// non-offensive with a slur is `reclaimed`, offensive with a slur is
// `off-slur`, offensive nominalization without a slur is `off-nom`; other
// combinations get the composite label Off=o|Slur=s|Nom=n|Dist=d.
std::string cold_category(const std::string& off, const std::string& slur, const std::string& nom,
                          const std::string& dist);

// Slices on the Cat column when present (identical to analyze_on), else on
// categories derived via cold_category from the Off/Slur/Nom/Dist columns.
AnalysisResult cold_analyze(const SubmissionObject& sub, const AnalysisOptions& opts = {});

struct HateCheckCategory {
  std::string category;  // display name, e.g. "spelling changes"
  std::string prefix;    // raw functionality prefix, e.g. "spell"
};

// Display category for a functionality code from its leading tag (the part
// before the first underscore); unknown prefixes pass through as-is.
HateCheckCategory hatecheck_category(const std::string& functionality);

// Slices by hatecheck_category of the functionality column, in alphabetical
// category order, each label suffixed " (h)" when the slice's gold labels
// are all hateful and " (nh)" when all non-hateful.
AnalysisResult hatecheck_analyze(const SubmissionObject& sub, const AnalysisOptions& opts = {});

struct ComparisonRow {
  std::string slice;
  std::size_t total = 0;
  std::size_t correct_a = 0;
  std::size_t correct_b = 0;
  double accuracy_a = 0.0;
  double accuracy_b = 0.0;
  double delta = 0.0;  // accuracy_a - accuracy_b
  bool empty_slice = false;
};

struct ComparisonResult {
  std::string dimension;
  std::string name_a = "model A";
  std::string name_b = "model B";
  std::vector<ComparisonRow> rows;
  AnalysisResult result_a;
  AnalysisResult result_b;
};

// Per-slice accuracy of two models on the same data and column. The
// submissions must wrap the same rows: equal row counts and identical gold
// labels (alignment error otherwise).
ComparisonResult compare_models(const SubmissionObject& sub_a, const SubmissionObject& sub_b,
                                const std::string& column, const AnalysisOptions& opts = {});

// Uniform draw from the misclassified rows among `rows`; absent when the
// slice has none. Deterministic for a given generator state.
std::optional<ExampleRef> sample_error_example(const SubmissionObject& sub,
                                               std::span<const std::size_t> rows,
                                               std::mt19937_64& rng);

}  // namespace slicecheck
