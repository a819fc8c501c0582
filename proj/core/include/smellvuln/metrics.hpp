#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smellvuln/model.hpp"

namespace smellvuln {

enum class Granularity { Method, Class, Package, File };

std::string_view to_string(Granularity granularity);
std::optional<Granularity> parse_granularity(std::string_view text);

/// Metric vector of one entity, keyed by metric id ("CYCLO", "ATFD_m", "TCC", ...).
struct MetricRecord {
    std::string entity;
    Granularity granularity = Granularity::Class;
    std::map<std::string, double> values;

    /// Throws InvariantError if the metric is absent.
    double at(std::string_view metric) const;

    bool operator==(const MetricRecord&) const = default;
};

/// Method ids: LOC CYCLO NOPAR MAXNESTING NOAV ATFD_m LAA FDP CM CC.
std::vector<MetricRecord> compute_method_metrics(const CodeFactsModel& model);

/// Class ids: LOC NOM NOA WMC ATFD TCC WOC NOPA NOAM BUR BOvR NProtM fan_in fan_out.
std::vector<MetricRecord> compute_class_metrics(const CodeFactsModel& model,
                                                const std::vector<MetricRecord>& method_metrics);

/// Package ids: Ca Ce I.
std::vector<MetricRecord> compute_package_metrics(const CodeFactsModel& model);

/// All three levels, each sorted by entity, with lookup by entity name.
class MetricSet {
public:
    MetricSet() = default;
    MetricSet(std::vector<MetricRecord> methods, std::vector<MetricRecord> classes, std::vector<MetricRecord> packages);

    const std::vector<MetricRecord>& methods() const { return methods_; }
    const std::vector<MetricRecord>& classes() const { return classes_; }
    const std::vector<MetricRecord>& packages() const { return packages_; }

    const MetricRecord* method(std::string_view name) const;
    const MetricRecord* cls(std::string_view name) const;
    const MetricRecord* package(std::string_view name) const;

private:
    std::vector<MetricRecord> methods_;
    std::vector<MetricRecord> classes_;
    std::vector<MetricRecord> packages_;
    std::map<std::string, std::size_t, std::less<>> method_index_;
    std::map<std::string, std::size_t, std::less<>> class_index_;
    std::map<std::string, std::size_t, std::less<>> package_index_;
};

MetricSet compute_metrics(const CodeFactsModel& model);

/// Shortest decimal text that reads back to the same double ("3", "0.3333333333333333").
std::string format_number(double value);

/// CSV `entity,granularity,metric,value`, rows sorted by (entity, metric).
std::string metrics_to_csv(const MetricSet& metrics);

} // namespace smellvuln
