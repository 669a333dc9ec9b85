#include "slicecheck/fsio.hpp"

#include <fstream>

#include "slicecheck/error.hpp"

namespace slicecheck {

void write_file_atomic(const std::filesystem::path& path, const std::string& bytes) {
  std::filesystem::path tmp = path;
  tmp += ".part";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) raise(ErrorCode::Io, "cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) raise(ErrorCode::Io, "cannot move " + tmp.string() + " into place: " + ec.message());
}

}  // namespace slicecheck
