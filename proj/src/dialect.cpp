#include "slicecheck/dialect.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "slicecheck/error.hpp"

namespace slicecheck {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

double parse_probability(const std::string& field, std::size_t line_no) {
  double value = 0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    raise(ErrorCode::Format,
          "line " + std::to_string(line_no) + ": '" + field + "' is not a number");
  }
  if (value < 0) {
    raise(ErrorCode::Value,
          "line " + std::to_string(line_no) + ": negative value " + field);
  }
  return value;
}

}  // namespace

DialectModel load_dialect_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::Io, "cannot open dialect model file: " + path);

  DialectModel model;
  std::string line;
  std::size_t line_no = 0;
  std::vector<double> column_sums;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields = split_tabs(line);
    if (model.topics.empty()) {
      if (fields.size() < 2) {
        raise(ErrorCode::Format, "line 1: header must name a word column and at least one topic");
      }
      model.topics.assign(fields.begin() + 1, fields.end());
      column_sums.assign(model.topics.size(), 0.0);
      continue;
    }
    if (fields.size() != model.topics.size() + 1) {
      raise(ErrorCode::Format, "line " + std::to_string(line_no) + ": expected " +
                                   std::to_string(model.topics.size() + 1) + " columns, found " +
                                   std::to_string(fields.size()));
    }
    std::vector<double> values(model.topics.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
      values[k] = parse_probability(fields[k + 1], line_no);
      column_sums[k] += values[k];
    }
    if (!model.vocab.emplace(fields[0], std::move(values)).second) {
      raise(ErrorCode::Value,
            "line " + std::to_string(line_no) + ": duplicate word '" + fields[0] + "'");
    }
  }
  if (model.topics.empty()) {
    raise(ErrorCode::Format, "empty model file: a header row is required");
  }

  // Any column summing past 1 means the file holds counts, not
  // probabilities; normalize each topic column to sum to 1.
  bool counts = false;
  for (double sum : column_sums) {
    if (sum > 1.0 + 1e-9) counts = true;
  }
  if (counts) {
    for (auto& [word, values] : model.vocab) {
      for (std::size_t k = 0; k < values.size(); ++k) {
        if (column_sums[k] > 0) values[k] /= column_sums[k];
      }
    }
  }

  model.priors.assign(model.topics.size(), 1.0 / model.topics.size());
  validate_model(model);
  return model;
}

void validate_model(const DialectModel& model) {
  std::size_t k = model.topics.size();
  if (k == 0) raise(ErrorCode::Value, "dialect model has no topics");
  if (model.priors.size() != k) {
    raise(ErrorCode::Value, "priors length " + std::to_string(model.priors.size()) +
                                " does not match " + std::to_string(k) + " topics");
  }
  double prior_sum = 0;
  for (double p : model.priors) {
    if (p < 0) raise(ErrorCode::Value, "negative prior");
    prior_sum += p;
  }
  if (std::abs(prior_sum - 1.0) > 1e-9) {
    raise(ErrorCode::Value, "priors must sum to 1");
  }
  for (const auto& [word, values] : model.vocab) {
    if (values.size() != k) {
      raise(ErrorCode::Value, "vocab entry '" + word + "' has " +
                                  std::to_string(values.size()) + " values, expected " +
                                  std::to_string(k));
    }
    for (double v : values) {
      if (v < 0) raise(ErrorCode::Value, "vocab entry '" + word + "' has a negative value");
    }
  }
}

DialectScore score_message(std::span<const std::string> tokens, const DialectModel& model) {
  std::size_t k = model.topics.size();
  std::vector<double> sum(k, 0.0);
  std::size_t in_vocab = 0;
  for (const std::string& token : tokens) {
    auto it = model.vocab.find(token);
    if (it == model.vocab.end()) continue;
    double norm = 0;
    for (std::size_t t = 0; t < k; ++t) norm += it->second[t] * model.priors[t];
    // All-zero likelihoods carry no evidence either.
    if (norm <= 0) continue;
    for (std::size_t t = 0; t < k; ++t) sum[t] += it->second[t] * model.priors[t] / norm;
    ++in_vocab;
  }
  DialectScore score;
  if (in_vocab == 0) {
    score.proportions = model.priors;
    score.uninformative = true;
    return score;
  }
  score.proportions.resize(k);
  for (std::size_t t = 0; t < k; ++t) score.proportions[t] = sum[t] / in_vocab;
  return score;
}

}  // namespace slicecheck
