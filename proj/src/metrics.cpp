#include "slicecheck/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <set>

#include "slicecheck/csv.hpp"
#include "slicecheck/error.hpp"

namespace slicecheck {

namespace {

void check_lengths(std::size_t gold, std::size_t pred) {
  if (gold != pred) {
    raise(ErrorCode::Count, "gold has " + std::to_string(gold) + " labels, predictions have " +
                                std::to_string(pred));
  }
}

}  // namespace

std::string format_metric(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", value);
  return buf;
}

const ClassMetrics* ClassificationReport::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return &per_class[i];
  }
  return nullptr;
}

ConfusionCounts confusion_counts(std::span<const std::string> gold,
                                 std::span<const std::string> pred) {
  check_lengths(gold.size(), pred.size());
  ConfusionCounts counts;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++counts[{gold[i], pred[i]}];
  }
  return counts;
}

ClassificationReport classification_report(std::span<const std::string> gold,
                                           std::span<const std::string> pred,
                                           const std::vector<std::string>* label_set) {
  check_lengths(gold.size(), pred.size());

  std::set<std::string> observed(gold.begin(), gold.end());
  observed.insert(pred.begin(), pred.end());

  ClassificationReport report;
  if (label_set != nullptr) {
    for (const std::string& label : observed) {
      if (std::find(label_set->begin(), label_set->end(), label) == label_set->end()) {
        raise(ErrorCode::Label, "observed label '" + label + "' missing from the label set");
      }
    }
    report.labels = *label_set;
  } else {
    report.labels.assign(observed.begin(), observed.end());
  }

  report.total = gold.size();
  report.empty_input = gold.empty();

  std::size_t matches = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == pred[i]) ++matches;
  }
  report.accuracy = report.total == 0 ? 0.0 : static_cast<double>(matches) / report.total;

  std::size_t total_support = 0;
  double macro_p = 0, macro_r = 0, macro_f = 0;
  double weighted_p = 0, weighted_r = 0, weighted_f = 0;

  for (const std::string& label : report.labels) {
    std::size_t tp = 0, support = 0, predicted = 0;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      bool g = gold[i] == label;
      bool p = pred[i] == label;
      if (g) ++support;
      if (p) ++predicted;
      if (g && p) ++tp;
    }
    ClassMetrics m;
    m.support = support;
    if (predicted == 0) {
      m.degenerate = true;
    } else {
      m.precision = static_cast<double>(tp) / predicted;
    }
    if (support == 0) {
      m.degenerate = true;
    } else {
      m.recall = static_cast<double>(tp) / support;
    }
    if (m.precision + m.recall > 0) {
      m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
    } else {
      m.degenerate = true;
    }
    total_support += support;
    macro_p += m.precision;
    macro_r += m.recall;
    macro_f += m.f1;
    weighted_p += support * m.precision;
    weighted_r += support * m.recall;
    weighted_f += support * m.f1;
    report.per_class.push_back(m);
  }

  std::size_t n_labels = report.labels.size();
  report.macro_avg.support = total_support;
  report.weighted_avg.support = total_support;
  if (n_labels > 0) {
    report.macro_avg.precision = macro_p / n_labels;
    report.macro_avg.recall = macro_r / n_labels;
    report.macro_avg.f1 = macro_f / n_labels;
  } else {
    report.macro_avg.degenerate = true;
  }
  if (total_support > 0) {
    report.weighted_avg.precision = weighted_p / total_support;
    report.weighted_avg.recall = weighted_r / total_support;
    report.weighted_avg.f1 = weighted_f / total_support;
  } else {
    report.weighted_avg.degenerate = true;
  }
  return report;
}

AccuracyValue accuracy(std::span<const std::string> gold, std::span<const std::string> pred) {
  check_lengths(gold.size(), pred.size());
  if (gold.empty()) return {0.0, true};
  std::size_t matches = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == pred[i]) ++matches;
  }
  return {static_cast<double>(matches) / gold.size(), false};
}

void write_report_csv(std::ostream& out, const ClassificationReport& report) {
  csv::write_row(out, {"Metrics", "precision", "recall", "f1-score", "support"});
  auto row = [&out](const std::string& name, const ClassMetrics& m) {
    csv::write_row(out, {name, format_metric(m.precision), format_metric(m.recall),
                         format_metric(m.f1), std::to_string(m.support)});
  };
  for (std::size_t i = 0; i < report.labels.size(); ++i) {
    row(report.labels[i], report.per_class[i]);
  }
  row("macro avg", report.macro_avg);
  row("weighted avg", report.weighted_avg);
}

nlohmann::json report_to_json(const ClassificationReport& report) {
  nlohmann::json per_class = nlohmann::json::object();
  auto metrics_json = [](const ClassMetrics& m) {
    return nlohmann::json{{"precision", m.precision},
                          {"recall", m.recall},
                          {"f1-score", m.f1},
                          {"support", m.support},
                          {"degenerate", m.degenerate}};
  };
  for (std::size_t i = 0; i < report.labels.size(); ++i) {
    per_class[report.labels[i]] = metrics_json(report.per_class[i]);
  }
  return nlohmann::json{{"classes", per_class},
                        {"macro avg", metrics_json(report.macro_avg)},
                        {"weighted avg", metrics_json(report.weighted_avg)},
                        {"accuracy", report.accuracy},
                        {"total", report.total},
                        {"empty_input", report.empty_input}};
}

}  // namespace slicecheck
