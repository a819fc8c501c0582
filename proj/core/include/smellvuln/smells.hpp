#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "smellvuln/metrics.hpp"
#include "smellvuln/model.hpp"
#include "smellvuln/thresholds.hpp"

namespace smellvuln {

enum class SmellId {
    GodClass,
    LazyClass,
    ComplexClass,
    LargeClass,
    DataClass,
    RefusedBequest,
    BrainClass,
    HubLikeDependency,
    FeatureEnvy,
    LongMethod,
    LongParameterList,
    BrainMethod,
    ShotgunSurgery,
    CyclicDependency,
    UnstableDependency,
    UnhealthyInheritanceHierarchy,
};

inline constexpr std::size_t kSmellCount = 16;

/// Display name, e.g. "Hub-Like Dependency".
std::string_view to_string(SmellId id);
std::optional<SmellId> parse_smell_id(std::string_view text);
const std::array<SmellId, kSmellCount>& all_smells();

struct SmellInstance {
    SmellId smell_id = SmellId::GodClass;
    Granularity granularity = Granularity::Class;
    std::string anchor;
    std::set<std::string> lifted_classes;
    std::map<std::string, double> evidence;

    bool operator==(const SmellInstance&) const = default;
};

/// Reporting label. Cyclic Dependency splits into "Class Cyclic Dependency"
/// and "Package Cyclic Dependency"; every other smell keeps its name.
std::string smell_label(const SmellInstance& instance);

/// The seventeen reporting labels in table order.
const std::vector<std::string>& smell_labels();

// Detection at native granularity. Class smells come back with
// lifted_classes = {anchor}; the others with lifted_classes empty until
// lift_to_class_level runs.
std::vector<SmellInstance> detect_class_smells(const MetricSet& metrics, const CodeFactsModel& model,
                                               const ThresholdConfig& config);
std::vector<SmellInstance> detect_method_smells(const MetricSet& metrics, const CodeFactsModel& model,
                                                const ThresholdConfig& config);
std::vector<SmellInstance> detect_architectural_smells(const MetricSet& metrics, const CodeFactsModel& model,
                                                       const ThresholdConfig& config);

/// Fills lifted_classes: method smells go to the owning class, file and
/// package smells to every class they contain. Throws InvariantError if an
/// anchor is missing from the model.
std::vector<SmellInstance> lift_to_class_level(std::vector<SmellInstance> instances, const CodeFactsModel& model);

/// All detectors plus lifting, sorted by (smell_id name, anchor).
std::vector<SmellInstance> detect_smells(const MetricSet& metrics, const CodeFactsModel& model,
                                         const ThresholdConfig& config);

void sort_instances(std::vector<SmellInstance>& instances);

/// CSV `smell_id,granularity,anchor,lifted_class,evidence_json`, one row per
/// (instance, lifted class).
std::string smells_to_csv(const std::vector<SmellInstance>& instances);

/// Inverse of smells_to_csv. Throws InputError on malformed rows.
std::vector<SmellInstance> smells_from_csv(std::string_view text);
std::vector<SmellInstance> load_smells(const std::filesystem::path& path);

} // namespace smellvuln
