#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "slicecheck/analysis.hpp"
#include "slicecheck/datasets.hpp"
#include "slicecheck/dialect.hpp"
#include "slicecheck/error.hpp"
#include "slicecheck/metrics.hpp"
#include "slicecheck/plot.hpp"
#include "slicecheck/preprocess.hpp"
#include "slicecheck/submission.hpp"
#include "slicecheck/table.hpp"

namespace py = pybind11;
using namespace slicecheck;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

json result_json(const AnalysisResult& result) {
  json rows = json::array();
  for (const PlotInfoRow& row : result.rows) {
    json r;
    r["slice"] = row.slice;
    r["total"] = row.total;
    r["total_correct"] = row.total_correct;
    if (row.empty_slice) {
      r["accuracy"] = nullptr;
    } else {
      r["accuracy"] = row.accuracy;
    }
    if (row.example.has_value()) {
      r["example"] = {{"text", row.example->text},
                      {"predicted", row.example->predicted},
                      {"gold", row.example->gold}};
    } else {
      r["example"] = nullptr;
    }
    rows.push_back(std::move(r));
  }
  json reports = json::array();
  for (const auto& [slice, report] : result.reports) {
    reports.push_back({{"slice", slice}, {"report", report_to_json(report)}});
  }
  return json{{"dimension", result.dimension},
              {"rows", std::move(rows)},
              {"reports", std::move(reports)},
              {"overall", report_to_json(result.overall)},
              {"diagnostics", result.diagnostics}};
}

json comparison_json(const ComparisonResult& comparison) {
  json rows = json::array();
  for (const ComparisonRow& row : comparison.rows) {
    json r;
    r["slice"] = row.slice;
    r["total"] = row.total;
    r["correct_a"] = row.correct_a;
    r["correct_b"] = row.correct_b;
    if (row.empty_slice) {
      r["accuracy_a"] = nullptr;
      r["accuracy_b"] = nullptr;
      r["delta"] = nullptr;
    } else {
      r["accuracy_a"] = row.accuracy_a;
      r["accuracy_b"] = row.accuracy_b;
      r["delta"] = row.delta;
    }
    rows.push_back(std::move(r));
  }
  return json{{"dimension", comparison.dimension},
              {"name_a", comparison.name_a},
              {"name_b", comparison.name_b},
              {"rows", std::move(rows)}};
}

AnalysisOptions make_options(bool show_examples, std::uint64_t seed) {
  AnalysisOptions opts;
  opts.show_examples = show_examples;
  opts.seed = seed;
  return opts;
}

LengthUnit parse_unit(const std::string& unit) {
  if (unit == "characters") return LengthUnit::Characters;
  if (unit == "words") return LengthUnit::Words;
  raise(ErrorCode::Argument, "length unit must be characters or words, got '" + unit + "'");
}

}  // namespace

PYBIND11_MODULE(_slicecheck, m) {
  m.doc() = "slice-based error analysis for binary offensive-language classifiers";

  py::register_exception<Error>(m, "SliceCheckError");

  py::class_<Table>(m, "Table")
      .def_static(
          "load_file", [](const std::string& path) { return Table::load_file(path); },
          py::arg("path"))
      .def("row_count", &Table::row_count)
      .def("column_names", &Table::column_names)
      .def("text_at", &Table::text_at, py::arg("row"), py::arg("column"))
      .def("__len__", &Table::row_count);

  py::class_<DatasetDescriptor>(m, "DatasetDescriptor")
      .def_readonly("name", &DatasetDescriptor::name)
      .def_readonly("text_column", &DatasetDescriptor::text_column)
      .def_readonly("gold_column", &DatasetDescriptor::gold_column)
      .def_readonly("label_domain", &DatasetDescriptor::label_domain)
      .def("__repr__",
           [](const DatasetDescriptor& d) { return "<DatasetDescriptor " + d.name + ">"; });

  py::class_<SubmissionObject>(m, "Submission")
      .def_property_readonly("gold", [](const SubmissionObject& s) { return s.gold; })
      .def_property_readonly("mapped", [](const SubmissionObject& s) { return s.mapped; })
      .def("__len__", [](const SubmissionObject& s) { return s.gold.size(); });

  py::class_<DialectModel>(m, "DialectModel")
      .def_readonly("topics", &DialectModel::topics)
      .def_readonly("priors", &DialectModel::priors);

  py::class_<AnalysisResult>(m, "AnalysisResult")
      .def_property_readonly("dimension",
                             [](const AnalysisResult& r) { return r.dimension; })
      .def("to_dict", [](const AnalysisResult& r) { return json_to_py(result_json(r)); });

  py::class_<ComparisonResult>(m, "ComparisonResult")
      .def("to_dict",
           [](const ComparisonResult& c) { return json_to_py(comparison_json(c)); });

  m.def("builtin_schemas", [] {
    std::vector<std::string> names;
    for (const auto& [name, descriptor] : builtin_descriptors()) names.push_back(name);
    return names;
  });
  m.def(
      "resolve_descriptor",
      [](const std::string& name_or_path) { return resolve_descriptor(name_or_path); },
      py::arg("name_or_path"));
  m.def(
      "load_dataset",
      [](const DatasetDescriptor& descriptor, const std::string& data_root,
         const std::string& data_path, bool coerce_case) {
        LoadOptions options;
        options.data_root = data_root;
        options.data_path = data_path;
        options.coerce_case = coerce_case;
        return load_dataset(descriptor, options);
      },
      py::arg("descriptor"), py::arg("data_root") = "", py::arg("data_path") = "",
      py::arg("coerce_case") = false);
  m.def("load_predictions", &load_predictions, py::arg("path"));
  m.def(
      "submit",
      [](const Table& table, const DatasetDescriptor& descriptor,
         const std::vector<std::string>& predictions,
         const std::map<std::string, std::string>& label_map, bool fold_case) {
        SubmitOptions options;
        options.fold_case = fold_case;
        return submit(table, descriptor, predictions, label_map, options);
      },
      py::arg("table"), py::arg("descriptor"), py::arg("predictions"), py::arg("label_map"),
      py::arg("fold_case") = false);

  m.def(
      "classification_report",
      [](const std::vector<std::string>& gold, const std::vector<std::string>& predicted) {
        return json_to_py(report_to_json(classification_report(gold, predicted)));
      },
      py::arg("gold"), py::arg("predicted"));

  m.def(
      "analyze_on",
      [](const SubmissionObject& sub, const std::string& column, bool show_examples,
         std::uint64_t seed) { return analyze_on(sub, column, make_options(show_examples, seed)); },
      py::arg("submission"), py::arg("column"), py::arg("show_examples") = false,
      py::arg("seed") = kDefaultSeed);
  m.def(
      "check_anno_agreement",
      [](const SubmissionObject& sub, const std::vector<std::string>& columns, bool show_examples,
         std::uint64_t seed) {
        return check_anno_agreement(sub, columns, make_options(show_examples, seed));
      },
      py::arg("submission"), py::arg("columns"), py::arg("show_examples") = false,
      py::arg("seed") = kDefaultSeed);
  m.def(
      "check_substring",
      [](const SubmissionObject& sub, const std::string& needle, bool ignore_case,
         bool show_examples, std::uint64_t seed) {
        return check_substring(sub, needle, make_options(show_examples, seed), ignore_case);
      },
      py::arg("submission"), py::arg("needle"), py::arg("ignore_case") = false,
      py::arg("show_examples") = false, py::arg("seed") = kDefaultSeed);
  m.def(
      "str_len_analysis",
      [](const SubmissionObject& sub, const std::string& unit, std::size_t bins,
         bool show_examples, std::uint64_t seed) {
        return str_len_analysis(sub, parse_unit(unit), bins, make_options(show_examples, seed));
      },
      py::arg("submission"), py::arg("unit") = "words", py::arg("bins") = 10,
      py::arg("show_examples") = false, py::arg("seed") = kDefaultSeed);
  m.def(
      "aave_analysis",
      [](const SubmissionObject& sub, const DialectModel& model, double threshold,
         bool show_examples, std::uint64_t seed) {
        return aave_analysis(sub, model, threshold, make_options(show_examples, seed));
      },
      py::arg("submission"), py::arg("model"), py::arg("threshold") = 0.5,
      py::arg("show_examples") = false, py::arg("seed") = kDefaultSeed);
  m.def(
      "cold_analyze",
      [](const SubmissionObject& sub, bool show_examples, std::uint64_t seed) {
        return cold_analyze(sub, make_options(show_examples, seed));
      },
      py::arg("submission"), py::arg("show_examples") = false, py::arg("seed") = kDefaultSeed);
  m.def(
      "hatecheck_analyze",
      [](const SubmissionObject& sub, bool show_examples, std::uint64_t seed) {
        return hatecheck_analyze(sub, make_options(show_examples, seed));
      },
      py::arg("submission"), py::arg("show_examples") = false, py::arg("seed") = kDefaultSeed);
  m.def(
      "compare_models",
      [](const SubmissionObject& sub_a, const SubmissionObject& sub_b, const std::string& column,
         const std::string& name_a, const std::string& name_b) {
        ComparisonResult comparison = compare_models(sub_a, sub_b, column, AnalysisOptions{});
        comparison.name_a = name_a;
        comparison.name_b = name_b;
        return comparison;
      },
      py::arg("submission_a"), py::arg("submission_b"), py::arg("column"),
      py::arg("name_a") = "model A", py::arg("name_b") = "model B");

  m.def(
      "preprocess_text",
      [](const std::string& text) { return preprocess_text(text, default_rules()); },
      py::arg("text"));
  m.def("load_dialect_model", &load_dialect_model, py::arg("path"));
  m.def(
      "score_message",
      [](const DialectModel& model, const std::string& text) {
        std::vector<std::string> tokens = tokenize(text);
        DialectScore score = score_message(tokens, model);
        return py::make_tuple(score.proportions, score.uninformative);
      },
      py::arg("model"), py::arg("text"));

  m.def("bar_chart_svg", [](const AnalysisResult& r) { return render_bar_chart(r); });
  m.def("length_histogram_svg",
        [](const AnalysisResult& r) { return render_length_histogram(r); });
  m.def("grouped_bars_svg", [](const ComparisonResult& c) { return render_grouped_bars(c); });
  m.def("reports_csv",
        [](const AnalysisResult& r) {
          std::ostringstream out;
          write_reports_csv(r, out);
          return out.str();
        });
  m.def("plot_info_csv",
        [](const AnalysisResult& r) {
          std::ostringstream out;
          write_plot_info(r, out);
          return out.str();
        });
  m.def("comparison_csv",
        [](const ComparisonResult& c) {
          std::ostringstream out;
          write_comparison_csv(c, out);
          return out.str();
        });
}
