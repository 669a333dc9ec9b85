#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace slicecheck {

// Text normalization for social-media style English: mention masking, URL
// masking, emoji-to-word conversion, lowercasing, whitespace collapsing.
struct NormalizationRules {
  std::string mention_token = "USER";
  std::string url_token = "HTML";
  // UTF-8 codepoint sequence -> shortname (letters, digits, hyphens only).
  std::map<std::string, std::string> emoji_table;
  bool lowercase = true;
};

// Built-in emoji table derived from Unicode character names ("hundred-points"
// style; hyphens become spaces on substitution).
const std::map<std::string, std::string>& default_emoji_table();

NormalizationRules default_rules();

// Raises a Value error when the mask tokens are not single whitespace-free
// tokens or a shortname contains characters outside [A-Za-z0-9-].
void validate_rules(const NormalizationRules& rules);

struct PreprocessOutcome {
  std::string text;
  // Codepoints that look like emoji but have no table entry; they pass
  // through unchanged.
  std::size_t unknown_emoji = 0;
};

// Total function: never raises, any UTF-8 text in, normalized text out.
// Idempotent: applying it twice equals applying it once.
PreprocessOutcome preprocess_text_verbose(const std::string& raw, const NormalizationRules& rules);
std::string preprocess_text(const std::string& raw, const NormalizationRules& rules);

// Maximal non-whitespace runs, in order.
std::vector<std::string> tokenize(const std::string& text);

}  // namespace slicecheck
