#pragma once

// First-principles counting reference for the classification report,
// written independently of the library implementation so the two can be
// checked against each other. Everything here is plain loops over the
// label sequences; no shared helpers with src/.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

struct Row {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::size_t support = 0;
};

struct Report {
  std::vector<std::string> labels;
  std::map<std::string, Row> per_class;
  Row macro;
  Row weighted;
  double accuracy = 0;
};

inline Report report(const std::vector<std::string>& gold, const std::vector<std::string>& pred,
                     std::vector<std::string> labels = {}) {
  Report out;
  if (labels.empty()) {
    std::set<std::string> seen(gold.begin(), gold.end());
    seen.insert(pred.begin(), pred.end());
    labels.assign(seen.begin(), seen.end());
  }
  out.labels = labels;

  std::size_t matches = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == pred[i]) ++matches;
  }
  out.accuracy = gold.empty() ? 0.0 : static_cast<double>(matches) / gold.size();

  std::size_t total_support = 0;
  for (const std::string& label : labels) {
    std::size_t tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      bool g = gold[i] == label;
      bool p = pred[i] == label;
      if (g && p) ++tp;
      if (!g && p) ++fp;
      if (g && !p) ++fn;
    }
    Row row;
    row.support = tp + fn;
    row.precision = (tp + fp) == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
    row.recall = row.support == 0 ? 0.0 : static_cast<double>(tp) / row.support;
    row.f1 = (row.precision + row.recall) == 0.0
                 ? 0.0
                 : 2.0 * row.precision * row.recall / (row.precision + row.recall);
    total_support += row.support;
    out.per_class[label] = row;
  }

  for (const std::string& label : labels) {
    const Row& row = out.per_class[label];
    out.macro.precision += row.precision;
    out.macro.recall += row.recall;
    out.macro.f1 += row.f1;
    out.weighted.precision += row.precision * row.support;
    out.weighted.recall += row.recall * row.support;
    out.weighted.f1 += row.f1 * row.support;
  }
  if (!labels.empty()) {
    out.macro.precision /= labels.size();
    out.macro.recall /= labels.size();
    out.macro.f1 /= labels.size();
  }
  if (total_support > 0) {
    out.weighted.precision /= total_support;
    out.weighted.recall /= total_support;
    out.weighted.f1 /= total_support;
  } else {
    out.weighted = Row{};
  }
  out.macro.support = total_support;
  out.weighted.support = total_support;
  return out;
}

}  // namespace oracle
