#pragma once

#include <string>

namespace slicecheck {

// Lowercase hex SHA-256 digests.
std::string sha256_hex(const std::string& bytes);
std::string sha256_file_hex(const std::string& path);

}  // namespace slicecheck
