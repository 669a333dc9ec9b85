#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "slicecheck/datasets.hpp"
#include "slicecheck/table.hpp"

namespace slicecheck {

// Canonical orientation: prediction label -> gold label (many-to-one is
// allowed, e.g. two fine-grained predicted labels both mapping to one gold
// label).
struct LabelMap {
  std::map<std::string, std::string> pairs;
};

struct SubmitOptions {
  // Case-insensitive matching of prediction values against map keys and of
  // map values against the gold domain.
  bool fold_case = false;
};

// Accepts a map written in either direction and returns it in canonical
// prediction->gold orientation: kept as-is when keys are prediction values
// and values gold values; inverted when written gold->prediction and a
// bijection. Ambiguous maps (valid both ways, not symmetric) raise an
// orientation error; gold->prediction with a repeated value raises an
// inversion error; predictions without a mapping raise a coverage error.
LabelMap resolve_label_map(const std::map<std::string, std::string>& user_map,
                           const std::set<std::string>& prediction_values,
                           const std::set<std::string>& gold_values, bool fold_case = false);

// A dataset bound to one model's predictions; what every analysis consumes.
struct SubmissionObject {
  Table table;  // input columns plus "prediction" (raw) and "prediction_mapped"
  DatasetDescriptor descriptor;
  std::string prediction_column = "prediction";
  std::string mapped_column = "prediction_mapped";
  LabelMap label_map;

  std::vector<std::string> gold;    // gold label per row
  std::vector<std::string> mapped;  // mapped prediction per row

  // Sorted union of observed gold values and the declared label domain;
  // the label set used by every classification report.
  std::vector<std::string> gold_domain;

  const std::string& text_column() const { return descriptor.text_column; }
};

// Binds predictions to a loaded dataset. Sanity checks: prediction count
// equals row count (count error), no missing predictions, every predicted
// value mapped (coverage error listing the offenders), map resolvable.
SubmissionObject submit(const Table& table, const DatasetDescriptor& descriptor,
                        const std::vector<std::string>& predictions,
                        const std::map<std::string, std::string>& user_map,
                        const SubmitOptions& options = {});

// Raw prediction strings from a CSV with a "prediction" column or a JSONL
// file with a "prediction" field. No kind inference: "1.0" stays "1.0".
std::vector<std::string> load_predictions(const std::string& path);

}  // namespace slicecheck
