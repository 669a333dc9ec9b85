#include "slicecheck/preprocess.hpp"

#include <algorithm>
#include <cctype>

#include "slicecheck/error.hpp"

namespace slicecheck {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool ascii_iequals(const std::string& text, std::size_t pos, const char* lit) {
  for (std::size_t i = 0; lit[i] != '\0'; ++i) {
    if (pos + i >= text.size()) return false;
    if (std::tolower(static_cast<unsigned char>(text[pos + i])) != lit[i]) return false;
  }
  return true;
}

// Length in bytes of the UTF-8 sequence starting at text[pos] (1 for ASCII
// and for malformed lead bytes, which we pass through untouched).
std::size_t utf8_len(const std::string& text, std::size_t pos) {
  unsigned char b = static_cast<unsigned char>(text[pos]);
  std::size_t len = 1;
  if ((b & 0xE0) == 0xC0) len = 2;
  else if ((b & 0xF0) == 0xE0) len = 3;
  else if ((b & 0xF8) == 0xF0) len = 4;
  if (pos + len > text.size()) return 1;
  for (std::size_t i = 1; i < len; ++i) {
    if ((static_cast<unsigned char>(text[pos + i]) & 0xC0) != 0x80) return 1;
  }
  return len;
}

char32_t utf8_codepoint(const std::string& text, std::size_t pos, std::size_t len) {
  unsigned char b = static_cast<unsigned char>(text[pos]);
  char32_t cp = 0;
  switch (len) {
    case 1: return b;
    case 2: cp = b & 0x1F; break;
    case 3: cp = b & 0x0F; break;
    case 4: cp = b & 0x07; break;
    default: return b;
  }
  for (std::size_t i = 1; i < len; ++i) {
    cp = (cp << 6) | (static_cast<unsigned char>(text[pos + i]) & 0x3F);
  }
  return cp;
}

bool is_emoji_codepoint(char32_t cp) {
  return (cp >= 0x1F000 && cp <= 0x1FFFF) || (cp >= 0x2600 && cp <= 0x27BF) ||
         (cp >= 0x2B00 && cp <= 0x2BFF);
}

struct UrlMatch {
  std::size_t start = std::string::npos;
  std::size_t prefix_end = 0;  // just past "www." or "://"
};

// Where a URL starts within `token`. The URL is either a scheme://... or a
// www.-prefixed host, and must begin at the token start or after a non-word
// character (so "x.com/@a" inside prose is left alone).
UrlMatch find_url(const std::string& token) {
  for (std::size_t i = 0; i < token.size(); ++i) {
    if (i > 0 && is_word_char(token[i - 1])) continue;
    if (ascii_iequals(token, i, "www.")) {
      if (token.size() > i + 4) return {i, i + 4};
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(token[i]))) {
      std::size_t j = i + 1;
      while (j < token.size() &&
             (std::isalnum(static_cast<unsigned char>(token[j])) || token[j] == '+' ||
              token[j] == '.' || token[j] == '-')) {
        ++j;
      }
      if (j + 2 < token.size() && token[j] == ':' && token[j + 1] == '/' && token[j + 2] == '/' &&
          token.size() > j + 3) {
        return {i, j + 3};
      }
    }
  }
  return {};
}

// Replace the URL tail of the token, keeping trailing .,!? punctuation. The
// match must still reach past the prefix after the punctuation is dropped,
// so a bare "www.!" stays as it is.
std::string mask_url(const std::string& token, const std::string& url_token) {
  UrlMatch match = find_url(token);
  if (match.start == std::string::npos) return token;
  std::size_t end = token.size();
  while (end > match.start && (token[end - 1] == '.' || token[end - 1] == ',' ||
                               token[end - 1] == '!' || token[end - 1] == '?')) {
    --end;
  }
  if (end <= match.prefix_end) return token;
  return token.substr(0, match.start) + url_token + token.substr(end);
}

// @name -> mention token wherever the @ is not preceded by a word character
// (so email addresses are left alone). A run of several @ signs before the
// name is part of the mention; otherwise masking "@@name" would leave a bare
// "@" behind for a second pass to treat as a fresh mention.
std::string mask_mentions(const std::string& token, const std::string& mention_token) {
  std::string out;
  out.reserve(token.size());
  std::size_t i = 0;
  while (i < token.size()) {
    if (token[i] == '@' && (i == 0 || !is_word_char(token[i - 1]))) {
      std::size_t j = i;
      while (j < token.size() && token[j] == '@') ++j;
      if (j < token.size() && is_word_char(token[j])) {
        while (j < token.size() && is_word_char(token[j])) ++j;
        out += mention_token;
        i = j;
        continue;
      }
    }
    out += token[i];
    ++i;
  }
  return out;
}

// Shortname -> substituted words: colons dropped, hyphens/underscores become
// spaces.
std::string shortname_words(const std::string& name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) {
    if (c == ':') continue;
    if (c == '-' || c == '_') {
      out += ' ';
    } else {
      out += c;
    }
  }
  return out;
}

std::string replace_emoji(const std::string& token, const NormalizationRules& rules,
                          std::size_t max_key_bytes, std::size_t* unknown_emoji) {
  std::string out;
  out.reserve(token.size());
  std::size_t i = 0;
  while (i < token.size()) {
    unsigned char b = static_cast<unsigned char>(token[i]);
    if (b < 0x80) {
      out += token[i];
      ++i;
      continue;
    }
    std::size_t limit = std::min(max_key_bytes, token.size() - i);
    std::size_t matched = 0;
    const std::string* name = nullptr;
    for (std::size_t len = limit; len >= 2; --len) {
      auto it = rules.emoji_table.find(token.substr(i, len));
      if (it != rules.emoji_table.end()) {
        matched = len;
        name = &it->second;
        break;
      }
    }
    if (matched > 0) {
      out += ' ';
      out += shortname_words(*name);
      out += ' ';
      i += matched;
      // A following variation selector belongs to the matched emoji.
      if (i + 3 <= token.size() && token.compare(i, 3, "\xef\xb8\x8f") == 0) i += 3;
      continue;
    }
    std::size_t len = utf8_len(token, i);
    if (len > 1 && is_emoji_codepoint(utf8_codepoint(token, i, len))) ++*unknown_emoji;
    out.append(token, i, len);
    i += len;
  }
  return out;
}

// ASCII-lowercase everything except whole-word occurrences of the mask
// tokens, which the output keeps uppercase.
std::string lowercase_preserving(const std::string& token, const std::vector<std::string>& masks) {
  std::string out;
  out.reserve(token.size());
  std::size_t i = 0;
  while (i < token.size()) {
    bool kept = false;
    for (const std::string& mask : masks) {
      if (mask.empty() || token.compare(i, mask.size(), mask) != 0) continue;
      bool left_ok = i == 0 || !is_word_char(token[i - 1]);
      std::size_t end = i + mask.size();
      bool right_ok = end == token.size() || !is_word_char(token[end]);
      if (left_ok && right_ok) {
        out += mask;
        i = end;
        kept = true;
        break;
      }
    }
    if (kept) continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(token[i])));
    ++i;
  }
  return out;
}

}  // namespace

NormalizationRules default_rules() {
  NormalizationRules rules;
  rules.emoji_table = default_emoji_table();
  return rules;
}

void validate_rules(const NormalizationRules& rules) {
  auto check_token = [](const std::string& token, const char* what) {
    if (token.empty()) raise(ErrorCode::Value, std::string(what) + " must not be empty");
    for (char c : token) {
      if (is_space(c)) raise(ErrorCode::Value, std::string(what) + " must not contain whitespace");
    }
  };
  check_token(rules.mention_token, "mention token");
  check_token(rules.url_token, "url token");
  for (const auto& [key, name] : rules.emoji_table) {
    if (key.empty()) raise(ErrorCode::Value, "emoji table keys must not be empty");
    for (char c : name) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-') {
        raise(ErrorCode::Value,
              "emoji shortname '" + name + "' contains characters outside letters/digits/hyphens");
      }
    }
  }
}

PreprocessOutcome preprocess_text_verbose(const std::string& raw,
                                          const NormalizationRules& rules) {
  std::size_t max_key_bytes = 0;
  for (const auto& [key, name] : rules.emoji_table) {
    max_key_bytes = std::max(max_key_bytes, key.size());
  }
  std::vector<std::string> masks = {rules.mention_token};
  if (rules.url_token != rules.mention_token) masks.push_back(rules.url_token);

  PreprocessOutcome outcome;
  std::string piece;
  bool first = true;
  auto emit = [&outcome, &first](const std::string& token) {
    if (token.empty()) return;
    if (!first) outcome.text += ' ';
    outcome.text += token;
    first = false;
  };
  for (const std::string& token : tokenize(raw)) {
    piece = mask_url(token, rules.url_token);
    piece = mask_mentions(piece, rules.mention_token);
    piece = replace_emoji(piece, rules, max_key_bytes, &outcome.unknown_emoji);
    if (rules.lowercase) piece = lowercase_preserving(piece, masks);
    // Emoji substitution can split a token into several words.
    for (const std::string& word : tokenize(piece)) emit(word);
  }
  return outcome;
}

std::string preprocess_text(const std::string& raw, const NormalizationRules& rules) {
  return preprocess_text_verbose(raw, rules).text;
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

}  // namespace slicecheck
