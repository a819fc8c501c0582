#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "smellvuln/model.hpp"

namespace smellvuln {

struct SourceFile {
    std::string path; ///< relative, '/'-separated
    std::string text;
};

struct ParseOptions {
    /// Worker threads for per-file parsing; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// Parses every `.java` file under `source_root` into a facts model.
///
/// Files outside the supported Java subset are listed in `skipped` with a
/// diagnostic. The result is canonical (sorted) and independent of
/// directory traversal order and thread count.
///
/// Throws InputError if the root does not exist and ModelError if two
/// declarations share a qualified name.
CodeFactsModel parse_corpus(const std::filesystem::path& source_root, std::string system, std::string version,
                            const ParseOptions& options = {});

/// Same as parse_corpus over in-memory sources.
CodeFactsModel parse_sources(const std::vector<SourceFile>& sources, std::string system, std::string version,
                             const ParseOptions& options = {});

} // namespace smellvuln
