#pragma once

#include <filesystem>
#include <string>

namespace smellvuln {

/// Whole-file read; throws InputError if the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// Whole-file write, creating parent directories; throws InputError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace smellvuln
