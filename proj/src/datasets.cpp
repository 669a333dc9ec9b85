#include "slicecheck/datasets.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include "slicecheck/digest.hpp"
#include "slicecheck/error.hpp"
#include "slicecheck/fsio.hpp"

namespace slicecheck {

namespace {

std::string trim(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return text.substr(begin, end - begin);
}

std::vector<std::string> split_list(const std::string& value, const std::string& key,
                                    const std::string& origin, std::size_t line_no) {
  std::vector<std::string> items;
  if (trim(value).empty()) return items;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = value.find(',', start);
    std::string item = trim(comma == std::string::npos ? value.substr(start)
                                                       : value.substr(start, comma - start));
    if (item.empty()) {
      raise(ErrorCode::Schema, origin + " line " + std::to_string(line_no) + ": empty item in '" +
                                   key + "' list");
    }
    items.push_back(item);
    if (comma == std::string::npos) return items;
    start = comma + 1;
  }
}

std::string ascii_lower(const std::string& text) {
  std::string out = text;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

const char kColdDescriptor[] = R"(# Complaints about Offensive Language, annotator-level labels included
name = cold
text_column = Text
gold_column = Off
features = ID, Cat, Slur, Nom, Dist
annotators.Off = Off1, Off2, Off3
annotators.Slur = Slur1, Slur2, Slur3
annotators.Nom = Nom1, Nom2, Nom3
annotators.Dist = Dist1, Dist2, Dist3
labels = Y, N
source.path = cold.csv
)";

const char kHateCheckDescriptor[] = R"(# HateCheck functional test suite for hate speech models
name = hatecheck
text_column = test_case
gold_column = label_gold
features = functionality, case_id, target_ident, direction, focus_words, focus_lemma, ref_case_id, ref_templ_id, templ_id
labels = hateful, non-hateful
source.path = hatecheck.csv
)";

const char kOlidDescriptor[] = R"(# OLID level-A annotations
name = olid
text_column = Text
gold_column = label
labels = OFF, NOT
source.path = olid.csv
)";

std::optional<Table::Format> table_format(const std::string& format_key) {
  if (format_key.empty()) return std::nullopt;
  if (format_key == "csv") return Table::Format::Csv;
  if (format_key == "jsonl") return Table::Format::Jsonl;
  raise(ErrorCode::Schema, "unknown source format '" + format_key + "' (expected csv or jsonl)");
}

struct ParsedUrl {
  std::string base;    // scheme://host[:port]
  std::string target;  // /path?query
};

ParsedUrl parse_url(const std::string& url) {
  std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    raise(ErrorCode::Fetch, "malformed URL (no scheme): " + url);
  }
  std::size_t host_start = scheme_end + 3;
  std::size_t path_start = url.find('/', host_start);
  if (host_start == std::min(path_start, url.size())) {
    raise(ErrorCode::Fetch, "malformed URL (no host): " + url);
  }
  if (path_start == std::string::npos) return {url, "/"};
  std::string target = url.substr(path_start);
  std::size_t fragment = target.find('#');
  if (fragment != std::string::npos) target.resize(fragment);
  return {url.substr(0, path_start), target.empty() ? "/" : target};
}

std::string url_extension(const std::string& url) {
  ParsedUrl parsed = parse_url(url);
  std::string path = parsed.target;
  std::size_t query = path.find('?');
  if (query != std::string::npos) path.resize(query);
  std::size_t slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = name.find_last_of('.');
  if (dot == std::string::npos || dot == 0) return "";
  return name.substr(dot);
}

}  // namespace

std::vector<std::string> required_columns(const DatasetDescriptor& descriptor) {
  std::vector<std::string> columns;
  std::set<std::string> seen;
  auto add = [&columns, &seen](const std::string& name) {
    if (!name.empty() && seen.insert(name).second) columns.push_back(name);
  };
  add(descriptor.text_column);
  add(descriptor.gold_column);
  for (const std::string& name : descriptor.feature_columns) add(name);
  for (const auto& [group, names] : descriptor.annotator_groups) {
    for (const std::string& name : names) add(name);
  }
  return columns;
}

void validate_descriptor(const DatasetDescriptor& descriptor) {
  if (descriptor.name.empty()) raise(ErrorCode::Schema, "descriptor is missing 'name'");
  if (descriptor.text_column.empty()) {
    raise(ErrorCode::Schema, "descriptor '" + descriptor.name + "' is missing 'text_column'");
  }
  if (descriptor.gold_column.empty()) {
    raise(ErrorCode::Schema, "descriptor '" + descriptor.name + "' is missing 'gold_column'");
  }
  for (const auto& [group, names] : descriptor.annotator_groups) {
    if (names.size() < 2) {
      raise(ErrorCode::Schema, "annotator group '" + group + "' needs at least 2 columns");
    }
  }
  std::set<std::string> domain(descriptor.label_domain.begin(), descriptor.label_domain.end());
  if (domain.size() != descriptor.label_domain.size()) {
    raise(ErrorCode::Schema, "label domain of '" + descriptor.name + "' has duplicates");
  }
  table_format(descriptor.source.format);
}

DatasetDescriptor parse_descriptor(std::istream& in, const std::string& origin) {
  DatasetDescriptor descriptor;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      raise(ErrorCode::Schema,
            origin + " line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      raise(ErrorCode::Schema, origin + " line " + std::to_string(line_no) + ": empty key");
    }
    if (!seen.insert(key).second) {
      raise(ErrorCode::Schema,
            origin + " line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    if (key == "name") {
      descriptor.name = value;
    } else if (key == "text_column") {
      descriptor.text_column = value;
    } else if (key == "gold_column") {
      descriptor.gold_column = value;
    } else if (key == "features") {
      descriptor.feature_columns = split_list(value, key, origin, line_no);
    } else if (key == "labels") {
      descriptor.label_domain = split_list(value, key, origin, line_no);
      if (descriptor.label_domain.empty()) {
        raise(ErrorCode::Schema, origin + " line " + std::to_string(line_no) +
                                     ": 'labels' must list at least one value");
      }
    } else if (key.rfind("annotators.", 0) == 0) {
      std::string group = key.substr(std::string("annotators.").size());
      if (group.empty()) {
        raise(ErrorCode::Schema,
              origin + " line " + std::to_string(line_no) + ": empty annotator group name");
      }
      descriptor.annotator_groups[group] = split_list(value, key, origin, line_no);
    } else if (key == "source.path") {
      descriptor.source.path = value;
    } else if (key == "source.url") {
      descriptor.source.url = value;
    } else if (key == "source.sha256") {
      descriptor.source.sha256 = ascii_lower(value);
    } else if (key == "source.format") {
      descriptor.source.format = ascii_lower(value);
    } else {
      raise(ErrorCode::Schema,
            origin + " line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  validate_descriptor(descriptor);
  return descriptor;
}

DatasetDescriptor load_descriptor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::Io, "cannot open descriptor file: " + path);
  return parse_descriptor(in, path);
}

const std::map<std::string, DatasetDescriptor>& builtin_descriptors() {
  static const std::map<std::string, DatasetDescriptor> builtins = [] {
    std::map<std::string, DatasetDescriptor> m;
    for (const char* config : {kColdDescriptor, kHateCheckDescriptor, kOlidDescriptor}) {
      std::istringstream in(config);
      DatasetDescriptor descriptor = parse_descriptor(in, "<built-in>");
      m.emplace(descriptor.name, std::move(descriptor));
    }
    return m;
  }();
  return builtins;
}

DatasetDescriptor resolve_descriptor(const std::string& name_or_path) {
  const auto& builtins = builtin_descriptors();
  auto it = builtins.find(name_or_path);
  if (it != builtins.end()) return it->second;
  if (std::filesystem::exists(name_or_path)) return load_descriptor_file(name_or_path);
  raise(ErrorCode::Schema, "unknown schema '" + name_or_path +
                               "': not a built-in (cold, hatecheck, olid) and no such file");
}

Table load_dataset(const DatasetDescriptor& descriptor, const LoadOptions& options) {
  std::filesystem::path path;
  std::optional<Table::Format> format = table_format(descriptor.source.format);
  if (!options.data_path.empty()) {
    path = options.data_path;
    format = std::nullopt;  // sniff from the user-supplied file
  } else if (!descriptor.source.url.empty()) {
    std::string cache_dir = options.cache_dir.empty() ? options.data_root : options.cache_dir;
    if (cache_dir.empty()) cache_dir = ".";
    path = fetch_remote(descriptor.source.url, cache_dir, descriptor.source.sha256);
  } else if (!descriptor.source.path.empty()) {
    path = descriptor.source.path;
    if (path.is_relative() && !options.data_root.empty()) {
      path = std::filesystem::path(options.data_root) / path;
    }
    if (!descriptor.source.sha256.empty()) {
      std::string got = sha256_file_hex(path.string());
      if (got != descriptor.source.sha256) {
        raise(ErrorCode::Integrity, "digest mismatch for " + path.string() + ": expected " +
                                        descriptor.source.sha256 + ", got " + got);
      }
    }
  } else {
    raise(ErrorCode::Schema,
          "descriptor '" + descriptor.name + "' has no source and no data path was given");
  }
  Table table = Table::load_file(path, format);
  return validate_dataset_table(descriptor, table, options.coerce_case);
}

Table validate_dataset_table(const DatasetDescriptor& descriptor, const Table& table,
                             bool coerce_case) {
  validate_descriptor(descriptor);
  for (const std::string& name : required_columns(descriptor)) {
    if (!table.has_column(name)) {
      raise(ErrorCode::Schema, "missing column " + name);
    }
  }

  const std::string& gold = descriptor.gold_column;
  std::vector<std::string> coerced;
  bool rewrote = false;
  for (std::size_t row = 0; row < table.row_count(); ++row) {
    if (is_missing(table.at(row, gold))) {
      raise(ErrorCode::Domain,
            "missing gold label in column '" + gold + "' at row " + std::to_string(row + 1));
    }
    std::string value = table.text_at(row, gold);
    if (!descriptor.label_domain.empty()) {
      bool exact = std::find(descriptor.label_domain.begin(), descriptor.label_domain.end(),
                             value) != descriptor.label_domain.end();
      if (!exact && coerce_case) {
        std::string folded = ascii_lower(value);
        for (const std::string& label : descriptor.label_domain) {
          if (ascii_lower(label) == folded) {
            value = label;
            rewrote = true;
            exact = true;
            break;
          }
        }
      }
      if (!exact) {
        raise(ErrorCode::Domain, "gold value '" + value + "' outside label domain {" +
                                     [&descriptor] {
                                       std::string joined;
                                       for (const std::string& label : descriptor.label_domain) {
                                         if (!joined.empty()) joined += ", ";
                                         joined += label;
                                       }
                                       return joined;
                                     }() +
                                     "} at row " + std::to_string(row + 1));
      }
    }
    if (coerce_case) coerced.push_back(value);
  }
  if (rewrote) {
    return table.with_column(gold, Column::from_strings(coerced));
  }
  return table;
}

std::vector<Table> batch_slices(const Table& table, std::size_t batch_size) {
  if (batch_size == 0) raise(ErrorCode::Argument, "batch size must be at least 1");
  std::vector<Table> batches;
  std::vector<std::size_t> indices;
  for (std::size_t start = 0; start < table.row_count(); start += batch_size) {
    std::size_t end = std::min(start + batch_size, table.row_count());
    indices.clear();
    for (std::size_t row = start; row < end; ++row) indices.push_back(row);
    batches.push_back(table.select_rows(indices));
  }
  return batches;
}

std::string fetch_remote(const std::string& url, const std::string& cache_dir,
                         const std::string& expected_sha256) {
  std::string expected = ascii_lower(expected_sha256);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  if (ec) raise(ErrorCode::Io, "cannot create cache directory " + cache_dir + ": " + ec.message());

  std::filesystem::path cached =
      std::filesystem::path(cache_dir) / (sha256_hex(url) + url_extension(url));
  if (std::filesystem::exists(cached)) {
    if (expected.empty() || sha256_file_hex(cached.string()) == expected) {
      return cached.string();
    }
    // Cached copy is stale or corrupt; fall through and fetch again.
  }

  ParsedUrl parsed = parse_url(url);
  httplib::Client client(parsed.base);
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(30, 0);
  client.set_follow_location(true);
  httplib::Result res = client.Get(parsed.target);
  if (!res) {
    raise(ErrorCode::Fetch, "fetch failed: " + url + ": " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    raise(ErrorCode::Fetch, "fetch failed: " + url + ": HTTP status " + std::to_string(res->status));
  }
  if (!expected.empty()) {
    std::string got = sha256_hex(res->body);
    if (got != expected) {
      raise(ErrorCode::Integrity,
            "digest mismatch for " + url + ": expected " + expected + ", got " + got);
    }
  }
  write_file_atomic(cached, res->body);
  return cached.string();
}

}  // namespace slicecheck
