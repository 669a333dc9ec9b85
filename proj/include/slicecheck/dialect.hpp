#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

namespace slicecheck {

// Word-probability model over K dialect topics. The first topic (index 0)
// is the demographically-associated one that the aave analysis consumes.
struct DialectModel {
  std::vector<std::string> topics;
  std::map<std::string, std::vector<double>> vocab;  // word -> p(word|topic), length K
  std::vector<double> priors;                        // length K, sums to 1
};

// TSV with a header row naming the topics (first column is the word column);
// data rows are word + K probability or count columns. When any topic column
// sums past 1 the file is count-valued and every column is normalized to
// sum to 1. Priors default to uniform.
DialectModel load_dialect_model(const std::string& path);

// Raises on length mismatches, negative entries, or priors not summing to 1.
void validate_model(const DialectModel& model);

struct DialectScore {
  std::vector<double> proportions;  // length K, sums to 1
  // No token was in the model vocabulary; proportions are the priors.
  bool uninformative = false;
};

// Mean of per-token posteriors (posterior ∝ likelihood × prior, normalized
// per token); out-of-vocabulary tokens are skipped.
DialectScore score_message(std::span<const std::string> tokens, const DialectModel& model);

}  // namespace slicecheck
