#pragma once

#include <filesystem>
#include <string>

namespace slicecheck {

// Writes via a sibling temp file and renames it into place, so readers
// never observe a half-written file.
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes);

}  // namespace slicecheck
