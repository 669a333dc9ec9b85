#pragma once

#include <map>
#include <string>
#include <vector>

#include "slicecheck/table.hpp"

namespace slicecheck {

struct DatasetSource {
  std::string path;    // local file, resolved against the data root when relative
  std::string url;     // remote file, fetched into the cache directory
  std::string sha256;  // optional integrity digest of the source file
  std::string format;  // "", "csv" or "jsonl"; "" sniffs from the extension
};

// Schema for one dataset: which columns hold the text and gold labels, which
// extra feature columns must exist, annotator column groups, and where the
// file lives.
struct DatasetDescriptor {
  std::string name;
  std::string text_column;
  std::string gold_column;
  std::vector<std::string> feature_columns;
  std::map<std::string, std::vector<std::string>> annotator_groups;
  std::vector<std::string> label_domain;  // empty = any gold value accepted
  DatasetSource source;
};

// Every column the descriptor requires, in declaration order without
// duplicates: text, gold, features, annotator groups.
std::vector<std::string> required_columns(const DatasetDescriptor& descriptor);

void validate_descriptor(const DatasetDescriptor& descriptor);

// Descriptor files are line-oriented `key = value` pairs ('#' comments):
//   name, text_column, gold_column, features (comma list),
//   annotators.<group> (comma list), labels (comma list),
//   source.path, source.url, source.sha256, source.format.
DatasetDescriptor parse_descriptor(std::istream& in, const std::string& origin);
DatasetDescriptor load_descriptor_file(const std::string& path);

// Built-in descriptors: cold, hatecheck, olid.
const std::map<std::string, DatasetDescriptor>& builtin_descriptors();

// A built-in name, or the path of a descriptor file.
DatasetDescriptor resolve_descriptor(const std::string& name_or_path);

struct LoadOptions {
  std::string data_root;   // base for relative source paths
  std::string cache_dir;   // where fetched files land (default data_root)
  std::string data_path;   // overrides the descriptor's source when set
  bool coerce_case = false;  // fold gold labels onto the declared domain's case
};

// Loads the descriptor's source file and validates it: all required columns
// present (schema error naming the first missing one), no missing gold
// cells, and every gold value inside the declared label domain (domain
// error naming value and row).
Table load_dataset(const DatasetDescriptor& descriptor, const LoadOptions& options = {});

// Validation half of load_dataset, for tables already in memory. Returns
// the table, with gold labels rewritten when coerce_case applies.
Table validate_dataset_table(const DatasetDescriptor& descriptor, const Table& table,
                             bool coerce_case = false);

// Consecutive row slices of at most batch_size rows; concatenation restores
// the table. batch_size 0 is an argument error.
std::vector<Table> batch_slices(const Table& table, std::size_t batch_size);

// Returns a cached local copy of the URL (cache key = SHA-256 of the URL
// plus the URL's file extension), downloading it first when absent. When
// expected_sha256 is set the file content must match it.
std::string fetch_remote(const std::string& url, const std::string& cache_dir,
                         const std::string& expected_sha256 = "");

}  // namespace slicecheck
