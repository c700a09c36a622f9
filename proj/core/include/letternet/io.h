#ifndef LETTERNET_IO_H_
#define LETTERNET_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace letternet::io {

// Whole file as bytes. Throws Error naming the path when it cannot be read.
std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`, so readers
// never observe a partially written output. Throws Error on failure.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace letternet::io

#endif  // LETTERNET_IO_H_
