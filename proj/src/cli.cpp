#include "slicecheck/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "slicecheck/analysis.hpp"
#include "slicecheck/datasets.hpp"
#include "slicecheck/error.hpp"
#include "slicecheck/fsio.hpp"
#include "slicecheck/plot.hpp"
#include "slicecheck/preprocess.hpp"
#include "slicecheck/submission.hpp"

namespace slicecheck {

namespace {

struct OnSpec {
  std::string kind;
  std::string args;
};

OnSpec parse_on(const std::string& text) {
  std::size_t colon = text.find(':');
  if (colon == std::string::npos) return {text, ""};
  return {text.substr(0, colon), text.substr(colon + 1)};
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    std::size_t begin = item.find_first_not_of(" \t");
    std::size_t end = item.find_last_not_of(" \t");
    items.push_back(begin == std::string::npos ? "" : item.substr(begin, end - begin + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return items;
}

std::map<std::string, std::string> parse_map_pairs(const std::vector<std::string>& pairs) {
  std::map<std::string, std::string> user_map;
  for (const std::string& pair : pairs) {
    std::size_t eq = pair.find('=');
    if (eq == std::string::npos || eq == 0) {
      raise(ErrorCode::Argument, "--map entries look like PREDICTED=GOLD, got '" + pair + "'");
    }
    std::string key = pair.substr(0, eq);
    if (!user_map.emplace(key, pair.substr(eq + 1)).second) {
      raise(ErrorCode::Argument, "--map repeats the label '" + key + "'");
    }
  }
  return user_map;
}

double parse_real(const std::string& text, const std::string& what) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    raise(ErrorCode::Argument, what + " must be a number, got '" + text + "'");
  }
  return value;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    raise(ErrorCode::Argument, what + " must be a non-negative integer, got '" + text + "'");
  }
  return value;
}

std::string env_data_root() {
  const char* value = std::getenv("SLICECHECK_DATA_DIR");
  return value == nullptr ? "" : value;
}

// Inputs shared by analyze and compare.
struct CommonInputs {
  std::string data;
  std::string schema;
  std::string data_root;
  std::string on;
  std::uint64_t seed = kDefaultSeed;
  bool show_examples = false;
  bool fold_case = false;
  bool coerce_case = false;
  std::size_t batch_size = 0;
  std::size_t batch_index = 0;
};

void add_common_inputs(CLI::App* cmd, CommonInputs& in) {
  cmd->add_option("--schema", in.schema,
                  "built-in schema name (cold, hatecheck, olid) or a descriptor file")
      ->required();
  cmd->add_option("--data", in.data, "dataset file (CSV or JSONL); overrides the schema's source");
  cmd->add_option("--data-root", in.data_root,
                  "base directory for relative schema sources (default $SLICECHECK_DATA_DIR)");
  cmd->add_option("--seed", in.seed, "seed for example sampling");
  cmd->add_flag("--show-examples", in.show_examples,
                "include a sampled misclassified example per slice (off by default; examples may "
                "contain offensive text)");
  cmd->add_flag("--fold-case", in.fold_case, "match labels case-insensitively");
  cmd->add_flag("--coerce-case", in.coerce_case,
                "fold gold labels onto the declared label domain's casing");
  cmd->add_option("--batch-size", in.batch_size, "analyze a single batch of this many rows");
  cmd->add_option("--batch-index", in.batch_index, "which batch to analyze (default 0)");
}

Table load_input_table(const DatasetDescriptor& descriptor, const CommonInputs& in) {
  LoadOptions options;
  options.data_root = in.data_root.empty() ? env_data_root() : in.data_root;
  options.coerce_case = in.coerce_case;
  options.data_path = in.data;
  Table table = load_dataset(descriptor, options);
  if (in.batch_size > 0) {
    std::vector<Table> batches = batch_slices(table, in.batch_size);
    if (in.batch_index >= batches.size()) {
      raise(ErrorCode::Argument, "batch index " + std::to_string(in.batch_index) +
                                     " out of range: only " + std::to_string(batches.size()) +
                                     " batches");
    }
    return batches[in.batch_index];
  }
  if (in.batch_index > 0) {
    raise(ErrorCode::Argument, "--batch-index needs --batch-size");
  }
  return table;
}

SubmissionObject make_submission(const DatasetDescriptor& descriptor, const Table& table,
                                 const std::string& predictions_path,
                                 const std::vector<std::string>& map_pairs, bool fold_case) {
  std::vector<std::string> predictions = load_predictions(predictions_path);
  SubmitOptions options;
  options.fold_case = fold_case;
  return submit(table, descriptor, predictions, parse_map_pairs(map_pairs), options);
}

AnalysisResult run_analysis(const SubmissionObject& sub, const OnSpec& on,
                            const AnalysisOptions& opts, const std::string& dialect_model_path,
                            bool ignore_case) {
  if (on.kind == "column") {
    if (on.args.empty()) raise(ErrorCode::Argument, "--on column:<name> needs a column name");
    return analyze_on(sub, on.args, opts);
  }
  if (on.kind == "anno-agreement") {
    return check_anno_agreement(sub, split_commas(on.args), opts);
  }
  if (on.kind == "substring") {
    return check_substring(sub, on.args, opts, ignore_case);
  }
  if (on.kind == "length") {
    std::vector<std::string> parts = split_commas(on.args);
    if (parts.size() != 2) {
      raise(ErrorCode::Argument, "--on length:<unit,bins> (unit: characters or words)");
    }
    LengthUnit unit;
    if (parts[0] == "characters") {
      unit = LengthUnit::Characters;
    } else if (parts[0] == "words") {
      unit = LengthUnit::Words;
    } else {
      raise(ErrorCode::Argument,
            "length unit must be characters or words, got '" + parts[0] + "'");
    }
    return str_len_analysis(sub, unit, parse_count(parts[1], "bin count"), opts);
  }
  if (on.kind == "aave") {
    if (dialect_model_path.empty()) {
      raise(ErrorCode::Argument, "--on aave needs --dialect-model PATH");
    }
    DialectModel model = load_dialect_model(dialect_model_path);
    double threshold = on.args.empty() ? 0.5 : parse_real(on.args, "aave threshold");
    return aave_analysis(sub, model, threshold, opts);
  }
  if (on.kind == "cold-cat") {
    if (!on.args.empty()) raise(ErrorCode::Argument, "cold-cat takes no arguments");
    return cold_analyze(sub, opts);
  }
  if (on.kind == "hatecheck-cat") {
    if (!on.args.empty()) raise(ErrorCode::Argument, "hatecheck-cat takes no arguments");
    return hatecheck_analyze(sub, opts);
  }
  raise(ErrorCode::Argument,
        "unknown analysis '" + on.kind +
            "' (expected column:<name>, anno-agreement:<cols>, substring:<s>, "
            "length:<unit,bins>, aave:<threshold>, cold-cat or hatecheck-cat)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"slice-based error analysis for binary offensive-language classifiers"};
  app.name("slicecheck");
  app.require_subcommand(1);

  CommonInputs an_in;
  std::string an_predictions, an_dialect_model, an_plot, an_report, an_plot_info;
  std::vector<std::string> an_map;
  bool an_ignore_case = false;
  CLI::App* analyze =
      app.add_subcommand("analyze", "run one analysis over one model's predictions");
  add_common_inputs(analyze, an_in);
  analyze->add_option("--predictions", an_predictions, "predictions file (CSV or JSONL)")
      ->required();
  analyze->add_option("--map", an_map, "label map entry PREDICTED=GOLD (repeatable)")->required();
  analyze
      ->add_option("--on", an_in.on,
                   "analysis: column:<name>, anno-agreement:<cols>, substring:<s>, "
                   "length:<unit,bins>, aave:<threshold>, cold-cat, hatecheck-cat")
      ->required();
  analyze->add_option("--dialect-model", an_dialect_model, "dialect model TSV for --on aave");
  analyze->add_flag("--ignore-case", an_ignore_case, "substring match ignores case");
  analyze->add_option("--plot", an_plot, "write an SVG chart here");
  analyze->add_option("--report", an_report, "write the per-slice reports CSV here");
  analyze->add_option("--plot-info", an_plot_info, "write the plot-info CSV here");

  CommonInputs cm_in;
  std::string cm_predictions_a, cm_predictions_b, cm_out, cm_plot;
  std::string cm_name_a = "model A", cm_name_b = "model B";
  std::vector<std::string> cm_map_a, cm_map_b;
  CLI::App* compare = app.add_subcommand("compare", "compare two models on the same dataset");
  add_common_inputs(compare, cm_in);
  compare->add_option("--predictions-a", cm_predictions_a, "first model's predictions")
      ->required();
  compare->add_option("--predictions-b", cm_predictions_b, "second model's predictions")
      ->required();
  compare->add_option("--map-a", cm_map_a, "label map for model A (PREDICTED=GOLD, repeatable)")
      ->required();
  compare->add_option("--map-b", cm_map_b, "label map for model B (defaults to model A's map)");
  compare->add_option("--name-a", cm_name_a, "display name for model A");
  compare->add_option("--name-b", cm_name_b, "display name for model B");
  compare->add_option("--on", cm_in.on, "comparison dimension: column:<name>")->required();
  compare->add_option("--out", cm_out, "write the comparison CSV here (default stdout)");
  compare->add_option("--plot", cm_plot, "write a grouped-bar SVG here");

  std::string pp_data, pp_column, pp_output;
  CLI::App* preprocess =
      app.add_subcommand("preprocess", "normalize a text column into preprocessed_text");
  preprocess->add_option("--data", pp_data, "input file (CSV or JSONL)")->required();
  preprocess->add_option("--column", pp_column, "text column to normalize")->required();
  preprocess->add_option("--output", pp_output, "output CSV path")->required();

  std::string ft_url, ft_cache_dir, ft_sha256;
  CLI::App* fetch = app.add_subcommand("fetch", "download a dataset file into the local cache");
  fetch->add_option("--url", ft_url, "file URL")->required();
  fetch->add_option("--cache-dir", ft_cache_dir,
                    "cache directory (default $SLICECHECK_DATA_DIR, else .)");
  fetch->add_option("--sha256", ft_sha256, "expected content digest");

  app.add_subcommand("schemas", "list the built-in dataset schemas");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("slicecheck");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand("analyze")) {
      DatasetDescriptor descriptor = resolve_descriptor(an_in.schema);
      Table table = load_input_table(descriptor, an_in);
      SubmissionObject sub =
          make_submission(descriptor, table, an_predictions, an_map, an_in.fold_case);
      OnSpec on = parse_on(an_in.on);
      AnalysisOptions opts;
      opts.show_examples = an_in.show_examples;
      opts.seed = an_in.seed;
      AnalysisResult result = run_analysis(sub, on, opts, an_dialect_model, an_ignore_case);
      for (const auto& [key, value] : result.diagnostics) {
        err << "note: " << key << " = " << value << "\n";
      }
      bool file_output = !an_plot.empty() || !an_report.empty() || !an_plot_info.empty();
      if (!an_plot.empty()) {
        if (on.kind == "length") {
          render_length_histogram(result, an_plot);
        } else {
          render_bar_chart(result, an_plot);
        }
      }
      if (!an_report.empty()) write_reports_csv(result, an_report);
      if (!an_plot_info.empty()) write_plot_info(result, an_plot_info);
      if (!file_output) {
        write_plot_info(result, out);
        out << "\n";
        write_reports_csv(result, out);
      }
      return 0;
    }

    if (app.got_subcommand("compare")) {
      DatasetDescriptor descriptor = resolve_descriptor(cm_in.schema);
      Table table = load_input_table(descriptor, cm_in);
      if (cm_map_b.empty()) cm_map_b = cm_map_a;
      SubmissionObject sub_a =
          make_submission(descriptor, table, cm_predictions_a, cm_map_a, cm_in.fold_case);
      SubmissionObject sub_b =
          make_submission(descriptor, table, cm_predictions_b, cm_map_b, cm_in.fold_case);
      OnSpec on = parse_on(cm_in.on);
      if (on.kind != "column" || on.args.empty()) {
        raise(ErrorCode::Argument, "compare supports --on column:<name>");
      }
      AnalysisOptions opts;
      opts.show_examples = cm_in.show_examples;
      opts.seed = cm_in.seed;
      ComparisonResult comparison = compare_models(sub_a, sub_b, on.args, opts);
      comparison.name_a = cm_name_a;
      comparison.name_b = cm_name_b;
      if (!cm_plot.empty()) render_grouped_bars(comparison, cm_plot);
      if (!cm_out.empty()) {
        write_comparison_csv(comparison, cm_out);
      } else {
        write_comparison_csv(comparison, out);
      }
      return 0;
    }

    if (app.got_subcommand("preprocess")) {
      Table table = Table::load_file(pp_data);
      if (!table.has_column(pp_column)) {
        raise(ErrorCode::Column, "no column named '" + pp_column + "'");
      }
      NormalizationRules rules = default_rules();
      std::vector<Cell> processed;
      processed.reserve(table.row_count());
      std::size_t unknown_emoji = 0;
      for (std::size_t row = 0; row < table.row_count(); ++row) {
        PreprocessOutcome outcome =
            preprocess_text_verbose(table.text_at(row, pp_column), rules);
        unknown_emoji += outcome.unknown_emoji;
        processed.emplace_back(std::move(outcome.text));
      }
      Table with =
          table.with_column("preprocessed_text", Column(CellKind::Text, std::move(processed)));
      std::ostringstream csv_out;
      with.write_csv(csv_out);
      write_file_atomic(pp_output, csv_out.str());
      if (unknown_emoji > 0) {
        err << "note: " << unknown_emoji << " emoji had no table entry and passed through\n";
      }
      return 0;
    }

    if (app.got_subcommand("fetch")) {
      std::string cache_dir = ft_cache_dir;
      if (cache_dir.empty()) cache_dir = env_data_root();
      if (cache_dir.empty()) cache_dir = ".";
      out << fetch_remote(ft_url, cache_dir, ft_sha256) << "\n";
      return 0;
    }

    // schemas
    for (const auto& [name, descriptor] : builtin_descriptors()) {
      out << name << "\n";
      out << "  text column: " << descriptor.text_column << "\n";
      out << "  gold column: " << descriptor.gold_column << "\n";
      if (!descriptor.label_domain.empty()) {
        out << "  labels:";
        for (const std::string& label : descriptor.label_domain) out << " " << label;
        out << "\n";
      }
      out << "  columns:";
      for (const std::string& column : required_columns(descriptor)) out << " " << column;
      out << "\n";
      for (const auto& [group, columns] : descriptor.annotator_groups) {
        out << "  annotators." << group << ":";
        for (const std::string& column : columns) out << " " << column;
        out << "\n";
      }
    }
    return 0;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return (e.code() == ErrorCode::Io || e.code() == ErrorCode::Fetch) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace slicecheck
