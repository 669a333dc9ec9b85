#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace slicecheck {

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
  // Set when a zero division was silenced (nothing predicted as the class,
  // zero support, or precision + recall == 0).
  bool degenerate = false;
};

struct ClassificationReport {
  std::vector<std::string> labels;
  std::vector<ClassMetrics> per_class;  // parallel to labels
  ClassMetrics macro_avg;
  ClassMetrics weighted_avg;
  double accuracy = 0.0;
  std::size_t total = 0;
  bool empty_input = false;

  const ClassMetrics* find(const std::string& label) const;
};

struct AccuracyValue {
  double value = 0.0;
  bool empty_input = false;
};

using ConfusionCounts = std::map<std::pair<std::string, std::string>, std::size_t>;

ConfusionCounts confusion_counts(std::span<const std::string> gold,
                                 std::span<const std::string> pred);

// Per-class precision/recall/F1/support plus macro and weighted averages.
// Zero divisions yield 0.0 and set the class's degenerate flag. The default
// label set is the sorted union of observed gold and predicted values; an
// explicit label set must cover every observed label.
ClassificationReport classification_report(std::span<const std::string> gold,
                                           std::span<const std::string> pred,
                                           const std::vector<std::string>* label_set = nullptr);

AccuracyValue accuracy(std::span<const std::string> gold, std::span<const std::string> pred);

// Rows = each class, macro avg, weighted avg; columns = precision, recall,
// f1-score, support. Metric values are rounded to 3 decimals for display;
// the in-memory report keeps full precision.
void write_report_csv(std::ostream& out, const ClassificationReport& report);

nlohmann::json report_to_json(const ClassificationReport& report);

std::string format_metric(double value);  // "%.3f"

}  // namespace slicecheck
