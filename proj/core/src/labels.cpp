#include "smellvuln/labels.hpp"

#include <algorithm>
#include <array>

#include <fmt/format.h>

#include "smellvuln/csv.hpp"
#include "smellvuln/error.hpp"
#include "key_value.hpp"
#include "text_io.hpp"

namespace smellvuln {

LabelFile parse_labels(std::string_view csv_text)
{
    LabelFile out;
    const auto rows = parse_csv(csv_text);
    if (rows.empty()) return out;

    constexpr std::array<std::string_view, 5> columns{"cve_id", "system", "affected_version", "class_path", "severity"};
    std::array<std::size_t, 5> at{};
    const auto& header = rows.front();
    for (std::size_t i = 0; i < columns.size(); ++i) {
        auto it = std::find_if(header.begin(), header.end(), [&](const std::string& h) { return trim(h) == columns[i]; });
        if (it == header.end()) throw InputError(fmt::format("labels: missing column '{}'", columns[i]));
        at[i] = static_cast<std::size_t>(it - header.begin());
    }

    std::set<std::tuple<std::string, std::string, std::string>> seen;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() == 1 && trim(row[0]).empty()) continue; // blank line
        if (row.size() != header.size()) {
            throw InputError(fmt::format("labels row {}: expected {} fields, found {}", r + 1, header.size(), row.size()));
        }
        VulnerabilityLabel label;
        label.cve_id = trim(row[at[0]]);
        label.system = trim(row[at[1]]);
        label.affected_version = trim(row[at[2]]);
        label.class_path = trim(row[at[3]]);
        if (auto severity = trim(row[at[4]]); !severity.empty()) label.severity = std::string(severity);
        if (label.cve_id.empty()) throw InputError(fmt::format("labels row {}: empty cve_id", r + 1));

        if (!seen.emplace(label.cve_id, label.affected_version, label.class_path).second) {
            out.warnings.push_back(fmt::format("labels row {}: duplicate of ({}, {}, {}) dropped", r + 1, label.cve_id,
                                               label.affected_version, label.class_path));
            continue;
        }
        out.labels.push_back(std::move(label));
    }
    return out;
}

LabelFile load_labels(const std::filesystem::path& path)
{
    return parse_labels(read_text_file(path));
}

StatusAssignment assign_status(const std::vector<const CodeFactsModel*>& versions,
                               const std::vector<VulnerabilityLabel>& labels, std::string system,
                               std::string major_release)
{
    StatusAssignment out;
    out.classes.system = std::move(system);
    out.classes.major_release = std::move(major_release);

    std::map<std::string, std::set<std::string>> classes_by_version;
    std::set<std::string> all_classes;
    for (const CodeFactsModel* m : versions) {
        auto& names = classes_by_version[m->version];
        for (const auto& c : m->classes) {
            names.insert(c.qualified_name);
            all_classes.insert(c.qualified_name);
        }
    }

    std::map<std::string, std::set<std::string>> cves;
    for (const auto& label : labels) {
        auto unmatched = [&](std::string reason) {
            out.unmatched.push_back({label.cve_id, label.affected_version, label.class_path, std::move(reason)});
        };
        if (label.system != out.classes.system) {
            unmatched("system not analyzed");
            continue;
        }
        auto version = classes_by_version.find(label.affected_version);
        if (version == classes_by_version.end()) {
            unmatched("no facts for affected version");
            continue;
        }
        if (!version->second.contains(label.class_path)) {
            unmatched("class not found in affected version");
            continue;
        }
        cves[label.class_path].insert(label.cve_id);
    }

    for (const auto& name : all_classes) {
        if (auto it = cves.find(name); it != cves.end()) {
            out.classes.vulnerable.insert(name);
            out.classes.vuln_count_per_class[name] = static_cast<std::int64_t>(it->second.size());
        } else {
            out.classes.neutral.insert(name);
        }
    }
    std::sort(out.unmatched.begin(), out.unmatched.end());
    return out;
}

std::string unmatched_to_csv(const std::vector<UnmatchedLabel>& unmatched)
{
    std::string out = "cve_id,affected_version,class_path,reason\n";
    for (const auto& u : unmatched) out += csv_row({u.cve_id, u.affected_version, u.class_path, u.reason});
    return out;
}

} // namespace smellvuln
