#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace smellvuln {

struct ThresholdConfig {
    double few = 5;
    double very_high_wmc = 47;
    double one_third = 1.0 / 3.0;
    double half = 0.5;
    double high_cyclo = 10;
    double large_class_loc = 500;
    double lazy_class_loc = 40;
    double lazy_class_nom = 3;
    double long_method_loc = 50;
    double long_params = 5;
    double brain_method_loc = 65;
    double brain_nesting = 5;
    double brain_noav = 5;
    double shotgun_cm = 10;
    double shotgun_cc = 5;
    double unstable_bad_dep_ratio = 0.3;

    /// Enables the second Data Class branch (NOPA + NOAM > many with WMC < very_high_wmc)
    /// and lowers the first branch's WMC bound to high_wmc.
    bool data_class_strict = false;
    double high_wmc = 31;
    double many = 8;

    bool operator==(const ThresholdConfig&) const = default;
};

/// Names of the numeric keys in file order; each is either a count (integer >= 1)
/// or a ratio in (0, 1].
struct ThresholdKey {
    std::string_view name;
    double ThresholdConfig::*member;
    bool is_ratio;
};
const std::vector<ThresholdKey>& threshold_keys();

/// Throws InputError naming the offending key.
void validate(const ThresholdConfig& config);

/// Flat `key = value` text; `#` starts a comment. Ratios may be written as
/// fractions ("1/3"). `hub_median_basis` accepts only "corpus". Unknown keys
/// are an error. Missing keys keep their defaults.
ThresholdConfig parse_thresholds(std::string_view text);
ThresholdConfig load_thresholds(const std::filesystem::path& path);

/// Inverse of parse_thresholds; lists every key.
std::string thresholds_to_text(const ThresholdConfig& config);

} // namespace smellvuln
