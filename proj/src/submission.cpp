#include "slicecheck/submission.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "slicecheck/csv.hpp"
#include "slicecheck/error.hpp"

namespace slicecheck {

namespace {

std::string fold(const std::string& text, bool fold_case) {
  if (!fold_case) return text;
  std::string out = text;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::set<std::string> fold_set(const std::set<std::string>& values, bool fold_case) {
  if (!fold_case) return values;
  std::set<std::string> out;
  for (const std::string& value : values) out.insert(fold(value, true));
  return out;
}

bool subset(const std::set<std::string>& inner, const std::set<std::string>& outer) {
  return std::all_of(inner.begin(), inner.end(),
                     [&outer](const std::string& v) { return outer.count(v) > 0; });
}

std::string join(const std::vector<std::string>& values) {
  std::string out;
  for (const std::string& value : values) {
    if (!out.empty()) out += ", ";
    out += value;
  }
  return out;
}

// The gold-domain spelling of `value`, honouring case folding.
std::string canonical_gold(const std::string& value, const std::set<std::string>& gold_values,
                           bool fold_case) {
  if (gold_values.count(value) > 0) return value;
  if (fold_case) {
    std::string folded = fold(value, true);
    for (const std::string& gold : gold_values) {
      if (fold(gold, true) == folded) return gold;
    }
  }
  raise(ErrorCode::Label, "map target '" + value + "' is not a gold label");
}

}  // namespace

LabelMap resolve_label_map(const std::map<std::string, std::string>& user_map,
                           const std::set<std::string>& prediction_values,
                           const std::set<std::string>& gold_values, bool fold_case) {
  if (user_map.empty()) raise(ErrorCode::Label, "label map is empty");

  // All orientation reasoning happens on the folded view of the map.
  std::map<std::string, std::string> folded_map;
  for (const auto& [key, value] : user_map) {
    auto [it, inserted] = folded_map.emplace(fold(key, fold_case), fold(value, fold_case));
    if (!inserted) {
      raise(ErrorCode::Label, "map keys collide under case folding: '" + key + "'");
    }
  }
  std::set<std::string> keys, values;
  for (const auto& [key, value] : folded_map) {
    keys.insert(key);
    values.insert(value);
  }
  std::set<std::string> preds = fold_set(prediction_values, fold_case);
  std::set<std::string> golds = fold_set(gold_values, fold_case);

  // Strict orientations account for the observed prediction values; the
  // shape-only fallbacks let a map name labels the model never produced.
  bool forward_strict = subset(keys, preds) && subset(values, golds);
  bool backward_strict = subset(keys, golds) && subset(values, preds);
  bool forward_shape = subset(values, golds);
  bool backward_shape = subset(keys, golds);
  bool bijective = values.size() == folded_map.size();
  bool symmetric = bijective;
  if (bijective) {
    for (const auto& [key, value] : folded_map) {
      auto it = folded_map.find(value);
      if (it == folded_map.end() || it->second != key) {
        symmetric = false;
        break;
      }
    }
  }

  auto ambiguous = [] {
    raise(ErrorCode::Orientation,
          "label map is valid in both directions; pass it as prediction=gold");
  };
  auto not_invertible = [] {
    raise(ErrorCode::Inversion,
          "label map looks gold->prediction but repeats a prediction, so it cannot be "
          "inverted; pass it as prediction=gold");
  };

  bool use_forward;
  if (forward_strict && backward_strict) {
    // Only acceptable when the map is its own inverse; otherwise the intent
    // is genuinely ambiguous.
    if (!symmetric) ambiguous();
    use_forward = true;
  } else if (forward_strict) {
    use_forward = true;
  } else if (backward_strict) {
    if (!bijective) not_invertible();
    use_forward = false;
  } else if (forward_shape && backward_shape && bijective && !symmetric) {
    ambiguous();
    use_forward = true;  // unreachable
  } else if (forward_shape) {
    use_forward = true;
  } else if (backward_shape) {
    if (!bijective) not_invertible();
    use_forward = false;
  } else {
    raise(ErrorCode::Label,
          "label map matches neither prediction->gold nor gold->prediction for the observed "
          "labels");
  }

  LabelMap resolved;
  for (const auto& [key, value] : user_map) {
    const std::string& pred = use_forward ? key : value;
    const std::string& gold = use_forward ? value : key;
    resolved.pairs[fold(pred, fold_case)] = canonical_gold(gold, gold_values, fold_case);
  }

  std::vector<std::string> unmapped;
  for (const std::string& value : preds) {
    if (resolved.pairs.count(value) == 0) unmapped.push_back(value);
  }
  if (!unmapped.empty()) {
    raise(ErrorCode::Coverage, "predictions contain unmapped values: " + join(unmapped));
  }
  return resolved;
}

SubmissionObject submit(const Table& table, const DatasetDescriptor& descriptor,
                        const std::vector<std::string>& predictions,
                        const std::map<std::string, std::string>& user_map,
                        const SubmitOptions& options) {
  if (predictions.size() != table.row_count()) {
    raise(ErrorCode::Count, "expected " + std::to_string(table.row_count()) +
                                " predictions, got " + std::to_string(predictions.size()));
  }
  if (!table.has_column(descriptor.gold_column)) {
    raise(ErrorCode::Schema, "missing column " + descriptor.gold_column);
  }
  for (std::size_t row = 0; row < predictions.size(); ++row) {
    if (predictions[row].empty()) {
      raise(ErrorCode::Count, "missing prediction at row " + std::to_string(row + 1));
    }
  }

  SubmissionObject sub;
  sub.descriptor = descriptor;
  sub.gold.reserve(table.row_count());
  for (std::size_t row = 0; row < table.row_count(); ++row) {
    sub.gold.push_back(table.text_at(row, descriptor.gold_column));
  }

  std::set<std::string> pred_values(predictions.begin(), predictions.end());
  std::set<std::string> gold_values(sub.gold.begin(), sub.gold.end());
  gold_values.insert(descriptor.label_domain.begin(), descriptor.label_domain.end());

  sub.label_map = resolve_label_map(user_map, pred_values, gold_values, options.fold_case);

  std::vector<std::string> unmapped;
  for (const std::string& value : pred_values) {
    if (sub.label_map.pairs.count(fold(value, options.fold_case)) == 0) {
      unmapped.push_back(value);
    }
  }
  if (!unmapped.empty()) {
    raise(ErrorCode::Coverage, "predictions contain unmapped values: " + join(unmapped));
  }

  sub.mapped.reserve(predictions.size());
  for (const std::string& value : predictions) {
    sub.mapped.push_back(sub.label_map.pairs.at(fold(value, options.fold_case)));
  }

  sub.gold_domain.assign(gold_values.begin(), gold_values.end());

  auto text_column = [](const std::vector<std::string>& values) {
    std::vector<Cell> cells;
    cells.reserve(values.size());
    for (const std::string& value : values) cells.emplace_back(value);
    return Column(CellKind::Text, std::move(cells));
  };
  sub.table = table.with_column(sub.prediction_column, text_column(predictions))
                  .with_column(sub.mapped_column, text_column(sub.mapped));
  return sub;
}

std::vector<std::string> load_predictions(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::Io, "cannot open predictions file: " + path);

  std::string ext = std::filesystem::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  std::vector<std::string> predictions;
  if (ext == ".jsonl" || ext == ".ndjson") {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
      if (record.is_discarded() || !record.is_object()) {
        raise(ErrorCode::Parse, "line " + std::to_string(line_no) + ": not a JSON object");
      }
      auto it = record.find("prediction");
      if (it == record.end() || it->is_null()) {
        raise(ErrorCode::Schema,
              "line " + std::to_string(line_no) + ": no 'prediction' field");
      }
      predictions.push_back(it->is_string() ? it->get<std::string>() : it->dump());
    }
    return predictions;
  }

  csv::Records records = csv::read(in);
  auto column = std::find(records.header.begin(), records.header.end(), "prediction");
  if (column == records.header.end()) {
    raise(ErrorCode::Schema, "predictions file has no 'prediction' column");
  }
  std::size_t index = static_cast<std::size_t>(column - records.header.begin());
  predictions.reserve(records.rows.size());
  for (const std::vector<std::string>& row : records.rows) {
    predictions.push_back(row[index]);
  }
  return predictions;
}

}  // namespace slicecheck
