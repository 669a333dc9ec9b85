#include "slicecheck/plot.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "slicecheck/csv.hpp"
#include "slicecheck/error.hpp"
#include "slicecheck/fsio.hpp"

namespace slicecheck {

namespace {

constexpr double kMarginLeft = 70;
constexpr double kMarginRight = 30;
constexpr double kMarginTop = 50;
constexpr double kMarginBottom = 120;
constexpr double kPlotHeight = 250;
constexpr const char* kColorA = "#4c72b0";
constexpr const char* kColorB = "#dd8452";

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

// Fixed two-decimal coordinates keep the output byte-stable.
std::string fmt(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string percent_label(double accuracy) {
  return std::to_string(std::lround(accuracy * 100.0)) + "%";
}

double chart_width(std::size_t slices, double slot) {
  return kMarginLeft + slot * static_cast<double>(slices) + kMarginRight;
}

double chart_height() { return kMarginTop + kPlotHeight + kMarginBottom; }

void open_svg(std::ostringstream& svg, double width, double height, const std::string& title) {
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height)
      << "\" font-family=\"sans-serif\">\n";
  svg << "  <title>" << xml_escape(title) << "</title>\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" fill=\"white\"/>\n";
  svg << "  <text x=\"" << fmt(width / 2) << "\" y=\"24\" font-size=\"16\" "
      << "text-anchor=\"middle\" class=\"chart-title\">" << xml_escape(title) << "</text>\n";
}

void draw_axes(std::ostringstream& svg, double width) {
  double bottom = kMarginTop + kPlotHeight;
  for (int tick = 0; tick <= 4; ++tick) {
    double frac = tick / 4.0;
    double y = bottom - kPlotHeight * frac;
    svg << "  <line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(y) << "\" x2=\""
        << fmt(width - kMarginRight) << "\" y2=\"" << fmt(y)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg << "  <text x=\"" << fmt(kMarginLeft - 8) << "\" y=\"" << fmt(y + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">" << std::lround(frac * 100) << "%</text>\n";
  }
  svg << "  <line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(kMarginTop) << "\" x2=\""
      << fmt(kMarginLeft) << "\" y2=\"" << fmt(bottom)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "  <line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(bottom) << "\" x2=\""
      << fmt(width - kMarginRight) << "\" y2=\"" << fmt(bottom)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "  <text x=\"18\" y=\"" << fmt(kMarginTop + kPlotHeight / 2)
      << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << fmt(kMarginTop + kPlotHeight / 2) << ")\">accuracy</text>\n";
}

void draw_x_label(std::ostringstream& svg, double center, const std::string& label,
                  bool rotated) {
  double y = kMarginTop + kPlotHeight + 16;
  if (rotated) {
    svg << "  <text x=\"" << fmt(center) << "\" y=\"" << fmt(y)
        << "\" font-size=\"11\" text-anchor=\"start\" transform=\"rotate(45 " << fmt(center) << " "
        << fmt(y) << ")\" class=\"xlabel\">" << xml_escape(label) << "</text>\n";
  } else {
    svg << "  <text x=\"" << fmt(center) << "\" y=\"" << fmt(y)
        << "\" font-size=\"11\" text-anchor=\"middle\" class=\"xlabel\">" << xml_escape(label)
        << "</text>\n";
  }
}

void draw_bar(std::ostringstream& svg, double x, double bar_width, double accuracy,
              const char* color, const std::string& tooltip) {
  double bottom = kMarginTop + kPlotHeight;
  double height = kPlotHeight * accuracy;
  svg << "  <rect class=\"bar\" x=\"" << fmt(x) << "\" y=\"" << fmt(bottom - height)
      << "\" width=\"" << fmt(bar_width) << "\" height=\"" << fmt(height) << "\" fill=\"" << color
      << "\">";
  svg << "<title>" << xml_escape(tooltip) << "</title>";
  svg << "</rect>\n";
  svg << "  <text x=\"" << fmt(x + bar_width / 2) << "\" y=\"" << fmt(bottom - height - 6)
      << "\" font-size=\"11\" text-anchor=\"middle\" class=\"pct\">" << percent_label(accuracy)
      << "</text>\n";
}

std::string close_svg(std::ostringstream& svg) {
  svg << "</svg>\n";
  return svg.str();
}

std::string accuracy_cell(double accuracy) { return cell_to_string(Cell(accuracy)); }

}  // namespace

std::string render_bar_chart(const AnalysisResult& result) {
  if (result.rows.empty()) raise(ErrorCode::Argument, "nothing to plot: no slices");
  const double slot = 80;
  double width = chart_width(result.rows.size(), slot);
  bool rotated = result.rows.size() > 6;
  std::ostringstream svg;
  open_svg(svg, width, chart_height(), result.dimension);
  draw_axes(svg, width);
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const PlotInfoRow& row = result.rows[i];
    double x = kMarginLeft + slot * static_cast<double>(i) + slot * 0.2;
    std::string tooltip = row.slice + ": " + std::to_string(row.total_correct) + " of " +
                          std::to_string(row.total) + " correct";
    draw_bar(svg, x, slot * 0.6, row.accuracy, kColorA, tooltip);
    draw_x_label(svg, kMarginLeft + slot * (static_cast<double>(i) + 0.5), row.slice, rotated);
  }
  return close_svg(svg);
}

std::string render_grouped_bars(const ComparisonResult& comparison) {
  if (comparison.rows.empty()) raise(ErrorCode::Argument, "nothing to plot: no slices");
  const double slot = 110;
  double width = chart_width(comparison.rows.size(), slot);
  if (width < 420) width = 420;  // room for the legend
  bool rotated = comparison.rows.size() > 6;
  std::ostringstream svg;
  open_svg(svg, width, chart_height(),
           comparison.name_a + " vs " + comparison.name_b + " by " + comparison.dimension);
  draw_axes(svg, width);
  for (std::size_t i = 0; i < comparison.rows.size(); ++i) {
    const ComparisonRow& row = comparison.rows[i];
    double left = kMarginLeft + slot * static_cast<double>(i);
    std::string tooltip = row.slice + ": " + comparison.name_a + " " +
                          percent_label(row.accuracy_a) + ", " + comparison.name_b + " " +
                          percent_label(row.accuracy_b) + ", delta " + format_number(row.delta);
    svg << "  <g class=\"pair\">";
    svg << "<title>" << xml_escape(tooltip) << "</title>\n";
    draw_bar(svg, left + slot * 0.15, slot * 0.3, row.accuracy_a, kColorA,
             comparison.name_a + " on " + row.slice);
    draw_bar(svg, left + slot * 0.55, slot * 0.3, row.accuracy_b, kColorB,
             comparison.name_b + " on " + row.slice);
    svg << "  </g>\n";
    draw_x_label(svg, left + slot * 0.5, row.slice, rotated);
  }
  // Legend, top right.
  double lx = width - kMarginRight - 160;
  for (int m = 0; m < 2; ++m) {
    double y = 34 + 18 * m;
    svg << "  <rect class=\"legend-swatch\" x=\"" << fmt(lx) << "\" y=\"" << fmt(y - 10)
        << "\" width=\"12\" height=\"12\" fill=\"" << (m == 0 ? kColorA : kColorB) << "\"/>\n";
    svg << "  <text x=\"" << fmt(lx + 18) << "\" y=\"" << fmt(y) << "\" font-size=\"12\">"
        << xml_escape(m == 0 ? comparison.name_a : comparison.name_b) << "</text>\n";
  }
  return close_svg(svg);
}

std::string render_length_histogram(const AnalysisResult& result) {
  if (result.rows.empty()) raise(ErrorCode::Argument, "nothing to plot: no bins");
  const double slot = 80;
  double width = chart_width(result.rows.size(), slot);
  bool rotated = result.rows.size() > 6;
  std::ostringstream svg;
  open_svg(svg, width, chart_height(), result.dimension);
  draw_axes(svg, width);
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const PlotInfoRow& row = result.rows[i];
    // Bins are contiguous: each bar spans its whole slot.
    double x = kMarginLeft + slot * static_cast<double>(i);
    std::string tooltip = row.slice + ": " + std::to_string(row.total_correct) + " of " +
                          std::to_string(row.total) + " correct";
    draw_bar(svg, x, slot, row.accuracy, kColorA, tooltip);
    std::string label = row.slice;
    if (row.empty_slice) label += " (empty)";
    draw_x_label(svg, x + slot * 0.5, label, rotated);
  }
  return close_svg(svg);
}

void render_bar_chart(const AnalysisResult& result, const std::string& path) {
  write_file_atomic(path, render_bar_chart(result));
}

void render_grouped_bars(const ComparisonResult& comparison, const std::string& path) {
  write_file_atomic(path, render_grouped_bars(comparison));
}

void render_length_histogram(const AnalysisResult& result, const std::string& path) {
  write_file_atomic(path, render_length_histogram(result));
}

void write_plot_info(const AnalysisResult& result, std::ostream& out) {
  csv::write_row(out, {"slice", "total", "total_correct", "accuracy", "example_text",
                       "example_pred", "example_gold"});
  for (const PlotInfoRow& row : result.rows) {
    std::vector<std::string> fields = {row.slice, std::to_string(row.total),
                                       std::to_string(row.total_correct),
                                       accuracy_cell(row.accuracy)};
    if (row.example) {
      fields.push_back(row.example->text);
      fields.push_back(row.example->predicted);
      fields.push_back(row.example->gold);
    } else {
      fields.insert(fields.end(), {"", "", ""});
    }
    csv::write_row(out, fields);
  }
}

void write_reports_csv(const AnalysisResult& result, std::ostream& out) {
  csv::write_row(out, {"category", "Metrics", "precision", "recall", "f1-score", "support"});
  auto block = [&out](const std::string& category, const ClassificationReport& report) {
    auto row = [&out, &category](const std::string& metrics, const ClassMetrics& m) {
      csv::write_row(out, {category, metrics, format_metric(m.precision), format_metric(m.recall),
                           format_metric(m.f1), std::to_string(m.support)});
    };
    for (std::size_t i = 0; i < report.labels.size(); ++i) {
      row(report.labels[i], report.per_class[i]);
    }
    row("macro avg", report.macro_avg);
    row("weighted avg", report.weighted_avg);
  };
  block("overall", result.overall);
  for (const auto& [slice, report] : result.reports) block(slice, report);
}

void write_comparison_csv(const ComparisonResult& comparison, std::ostream& out) {
  csv::write_row(out, {"slice", "total", "correct_a", "correct_b", "accuracy_a", "accuracy_b",
                       "delta"});
  for (const ComparisonRow& row : comparison.rows) {
    csv::write_row(out, {row.slice, std::to_string(row.total), std::to_string(row.correct_a),
                         std::to_string(row.correct_b), accuracy_cell(row.accuracy_a),
                         accuracy_cell(row.accuracy_b), accuracy_cell(row.delta)});
  }
}

namespace {

template <typename Fn>
void write_csv_atomic(const std::string& path, Fn&& fn) {
  std::ostringstream out;
  fn(out);
  write_file_atomic(path, out.str());
}

}  // namespace

void write_plot_info(const AnalysisResult& result, const std::string& path) {
  write_csv_atomic(path, [&result](std::ostream& out) { write_plot_info(result, out); });
}

void write_reports_csv(const AnalysisResult& result, const std::string& path) {
  write_csv_atomic(path, [&result](std::ostream& out) { write_reports_csv(result, out); });
}

void write_comparison_csv(const ComparisonResult& comparison, const std::string& path) {
  write_csv_atomic(path, [&comparison](std::ostream& out) { write_comparison_csv(comparison, out); });
}

}  // namespace slicecheck
