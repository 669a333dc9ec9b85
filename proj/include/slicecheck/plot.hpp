#pragma once

#include <iosfwd>
#include <string>

#include "slicecheck/analysis.hpp"

namespace slicecheck {

// Standalone SVG bar chart: one class="bar" rect per slice, bar height
// proportional to accuracy, a round(accuracy*100)% label above each bar,
// slice names on the x axis (rotated past 6 slices). Zero rows is an
// argument error.
std::string render_bar_chart(const AnalysisResult& result);
void render_bar_chart(const AnalysisResult& result, const std::string& path);

// Two bars per slice plus a legend naming the models; each pair carries a
// tooltip with the accuracy delta.
std::string render_grouped_bars(const ComparisonResult& comparison);
void render_grouped_bars(const ComparisonResult& comparison, const std::string& path);

// Contiguous bars over the length bins; empty bins render at zero height
// with an " (empty)" tag on the label.
std::string render_length_histogram(const AnalysisResult& result);
void render_length_histogram(const AnalysisResult& result, const std::string& path);

// Plot-info CSV: slice, total, total_correct, accuracy, example_text,
// example_pred, example_gold. Accuracy keeps full precision so reloading
// reproduces the values; example cells are empty when no example exists.
void write_plot_info(const AnalysisResult& result, std::ostream& out);
void write_plot_info(const AnalysisResult& result, const std::string& path);

// Per-slice classification reports, one block per slice after the overall
// block: category, Metrics, precision, recall, f1-score, support. Metric
// cells are formatted to 3 decimals.
void write_reports_csv(const AnalysisResult& result, std::ostream& out);
void write_reports_csv(const AnalysisResult& result, const std::string& path);

// Comparison table: slice, total, correct_a, correct_b, accuracy_a,
// accuracy_b, delta.
void write_comparison_csv(const ComparisonResult& comparison, std::ostream& out);
void write_comparison_csv(const ComparisonResult& comparison, const std::string& path);

}  // namespace slicecheck
