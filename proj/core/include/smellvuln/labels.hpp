#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "smellvuln/model.hpp"

namespace smellvuln {

/// One class touched by the fix of one reported vulnerability.
struct VulnerabilityLabel {
    std::string cve_id;
    std::string system;
    std::string affected_version;
    std::string class_path;
    std::optional<std::string> severity;

    auto operator<=>(const VulnerabilityLabel&) const = default;
};

struct LabelFile {
    std::vector<VulnerabilityLabel> labels; ///< file order, duplicates removed
    std::vector<std::string> warnings;
};

/// Reads the labels CSV (`cve_id,system,affected_version,class_path,severity`,
/// columns in any order). Rows repeating a (cve_id, affected_version,
/// class_path) key are dropped with a warning. Throws InputError on a missing
/// column or an empty cve_id.
LabelFile parse_labels(std::string_view csv_text);
LabelFile load_labels(const std::filesystem::path& path);

struct LabeledClassSet {
    std::string system;
    std::string major_release;
    std::set<std::string> vulnerable;
    std::set<std::string> neutral;
    std::map<std::string, std::int64_t> vuln_count_per_class; ///< distinct CVEs, vulnerable classes only

    bool operator==(const LabeledClassSet&) const = default;
};

struct UnmatchedLabel {
    std::string cve_id;
    std::string affected_version;
    std::string class_path;
    std::string reason;

    auto operator<=>(const UnmatchedLabel&) const = default;
};

struct StatusAssignment {
    LabeledClassSet classes;
    std::vector<UnmatchedLabel> unmatched; ///< sorted
};

/// Marks every class labeled in any version of the release vulnerable and
/// every other class seen in any version neutral. Labels for another system,
/// for a version without a model, or naming a class absent from that
/// version's model are reported as unmatched.
StatusAssignment assign_status(const std::vector<const CodeFactsModel*>& versions,
                               const std::vector<VulnerabilityLabel>& labels, std::string system,
                               std::string major_release);

/// CSV `cve_id,affected_version,class_path,reason`.
std::string unmatched_to_csv(const std::vector<UnmatchedLabel>& unmatched);

} // namespace smellvuln
