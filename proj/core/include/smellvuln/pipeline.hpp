#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smellvuln/model.hpp"
#include "smellvuln/report.hpp"
#include "smellvuln/smells.hpp"
#include "smellvuln/thresholds.hpp"

namespace smellvuln {

struct VersionSpec {
    std::string system;
    std::string release;
    std::string version;
    std::filesystem::path source; ///< source directory, or a facts `.json` file

    bool operator==(const VersionSpec&) const = default;
};

/// Run configuration, one `key = value` per line:
///
///   labels     = labels.csv
///   thresholds = thresholds.txt            (optional)
///   out_dir    = out                       (optional)
///   version    = tomcat, 7, 7.0.52, src/7.0.52
///
/// `version` repeats; versions of one release are listed oldest first.
/// Relative paths are resolved against the config file's directory.
struct RunConfig {
    std::filesystem::path labels;
    std::optional<std::filesystem::path> thresholds;
    std::optional<std::filesystem::path> out_dir;
    std::vector<VersionSpec> versions;
};

RunConfig parse_run_config(std::string_view text, const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path);

/// Loads a version from a source tree or a facts file.
CodeFactsModel load_version(const VersionSpec& spec, unsigned threads = 0);

struct PipelineResult {
    std::map<std::string, std::string> files; ///< relative output path -> contents
    std::vector<std::string> warnings;
};

/// Runs facts -> metrics -> smells -> labels -> stats entirely in memory.
/// `thresholds_override` takes precedence over the config's thresholds file.
PipelineResult run_pipeline(const RunConfig& config,
                            const std::optional<std::filesystem::path>& thresholds_override = std::nullopt,
                            unsigned threads = 0);

/// Writes every file under `out_dir`. If any write fails, files already
/// written by this call are removed and InputError is thrown.
void write_outputs(const std::map<std::string, std::string>& files, const std::filesystem::path& out_dir);

/// File-name-safe form of a version label.
std::string safe_file_stem(std::string_view text);

} // namespace smellvuln
