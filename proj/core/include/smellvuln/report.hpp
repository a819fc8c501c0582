#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "smellvuln/labels.hpp"
#include "smellvuln/model.hpp"
#include "smellvuln/smells.hpp"
#include "smellvuln/stats.hpp"

namespace smellvuln {

/// Per class: the reporting labels of every smell lifted onto it.
using SmellPresence = std::map<std::string, std::set<std::string>>;

/// Union of the lifted smells of several versions.
SmellPresence smell_presence(const std::vector<const std::vector<SmellInstance>*>& versions);

/// Smelly/vulnerable table over the labeled classes. `smelly` must cover
/// every labeled class; throws InvariantError otherwise.
ContingencyTable build_rq1_table(const LabeledClassSet& labeled, const std::map<std::string, bool>& smelly);

/// Table for "has any smell" over the labeled classes.
ContingencyTable any_smell_table(const LabeledClassSet& labeled, const SmellPresence& presence);

/// Table for one reporting label over the labeled classes.
ContingencyTable smell_table(const LabeledClassSet& labeled, const SmellPresence& presence, const std::string& label);

/// Chi-square tests for every reporting label, keyed by label.
std::map<std::string, TestResult> per_smell_tests(const LabeledClassSet& labeled, const SmellPresence& presence);

struct CorpusSummary {
    std::string system;
    std::string release;
    std::vector<std::string> versions;
    std::int64_t class_count = 0;
    std::int64_t method_count = 0;
    std::int64_t loc = 0;

    bool operator==(const CorpusSummary&) const = default;
};

/// Counts classes, methods and file LOC of one model.
CorpusSummary summarize_corpus(const CodeFactsModel& model);

struct DistributionReport {
    std::string system;
    std::string release;
    std::int64_t vulnerable_smelly = 0;
    std::int64_t vulnerable_clean = 0;
    std::int64_t vulnerabilities_in_smelly = 0;
    std::int64_t smells_in_smelly_vulnerable = 0;
    std::int64_t neutral_smelly = 0;
    std::int64_t neutral_clean = 0;
    std::int64_t vulnerabilities_in_smelly_neutral = 0; ///< always 0; kept for a symmetric table
    std::int64_t smells_in_smelly_neutral = 0;
    double mean_smells_vulnerable = 0;
    double mean_smells_neutral = 0;
    /// Instance counts summed over versions before cross-version deduplication.
    std::int64_t raw_smells_vulnerable = 0;
    std::int64_t raw_smells_neutral = 0;

    bool operator==(const DistributionReport&) const = default;
};

/// Per-class smell counts: distinct (label, anchor) instances across versions,
/// and the raw per-version sum.
struct SmellCounts {
    std::map<std::string, std::int64_t> distinct;
    std::map<std::string, std::int64_t> raw;
};
SmellCounts count_smells(const std::vector<const std::vector<SmellInstance>*>& versions);

DistributionReport distribution(const LabeledClassSet& labeled, const SmellCounts& counts);

/// One major release: its versions (oldest first) and their detections.
struct ReleaseInput {
    std::string system;
    std::string release;
    std::vector<const CodeFactsModel*> models;
    std::vector<const std::vector<SmellInstance>*> smells;
};

struct ReleaseAnalysis {
    StatusAssignment status;
    SmellPresence presence;
    CorpusSummary summary;
    DistributionReport distribution;
    TestResult rq1;
    std::map<std::string, TestResult> per_smell;
};

ReleaseAnalysis analyze_release(const ReleaseInput& input, const std::vector<VulnerabilityLabel>& labels);

/// Everything the correlation stage reports, as file name -> contents.
struct CorrelationOutputs {
    std::vector<ReleaseAnalysis> releases;
    std::vector<UnmatchedLabel> unmatched;
    std::map<std::string, std::string> files;
};

/// Analyzes every release. Labels naming a (system, version) that no release
/// covers are reported unmatched. `extra_bundle` is merged into bundle.json
/// at top level (thresholds, warnings).
CorrelationOutputs correlate(const std::vector<ReleaseInput>& releases, const std::vector<VulnerabilityLabel>& labels,
                             const std::string& extra_bundle_json = "{}");

} // namespace smellvuln
