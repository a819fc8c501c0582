#include "smellvuln/thresholds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "key_value.hpp"
#include "smellvuln/error.hpp"
#include "smellvuln/metrics.hpp"
#include "text_io.hpp"

namespace smellvuln {

namespace {

std::optional<double> parse_double(std::string_view text)
{
    double value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value)) return std::nullopt;
    return value;
}

std::optional<double> parse_number(std::string_view text)
{
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_double(trim(text.substr(0, slash)));
        auto den = parse_double(trim(text.substr(slash + 1)));
        if (!num || !den || *den == 0) return std::nullopt;
        return *num / *den;
    }
    return parse_double(text);
}

} // namespace

const std::vector<ThresholdKey>& threshold_keys()
{
    static const std::vector<ThresholdKey> keys{
        {"few", &ThresholdConfig::few, false},
        {"very_high_wmc", &ThresholdConfig::very_high_wmc, false},
        {"one_third", &ThresholdConfig::one_third, true},
        {"half", &ThresholdConfig::half, true},
        {"high_cyclo", &ThresholdConfig::high_cyclo, false},
        {"large_class_loc", &ThresholdConfig::large_class_loc, false},
        {"lazy_class_loc", &ThresholdConfig::lazy_class_loc, false},
        {"lazy_class_nom", &ThresholdConfig::lazy_class_nom, false},
        {"long_method_loc", &ThresholdConfig::long_method_loc, false},
        {"long_params", &ThresholdConfig::long_params, false},
        {"brain_method_loc", &ThresholdConfig::brain_method_loc, false},
        {"brain_nesting", &ThresholdConfig::brain_nesting, false},
        {"brain_noav", &ThresholdConfig::brain_noav, false},
        {"shotgun_cm", &ThresholdConfig::shotgun_cm, false},
        {"shotgun_cc", &ThresholdConfig::shotgun_cc, false},
        {"unstable_bad_dep_ratio", &ThresholdConfig::unstable_bad_dep_ratio, true},
        {"high_wmc", &ThresholdConfig::high_wmc, false},
        {"many", &ThresholdConfig::many, false},
    };
    return keys;
}

void validate(const ThresholdConfig& config)
{
    for (const auto& key : threshold_keys()) {
        const double v = config.*key.member;
        if (key.is_ratio) {
            if (!(v > 0 && v <= 1)) throw InputError(fmt::format("threshold {} = {} is not in (0, 1]", key.name, v));
        } else if (!(v >= 1 && std::floor(v) == v)) {
            throw InputError(fmt::format("threshold {} = {} is not an integer >= 1", key.name, v));
        }
    }
}

ThresholdConfig parse_thresholds(std::string_view text)
{
    ThresholdConfig config;
    for (const auto& entry : parse_key_values(text, "thresholds")) {
        const auto& [line, key, value] = entry;
        if (key == "hub_median_basis") {
            if (value != "corpus") {
                throw InputError(fmt::format("thresholds line {}: hub_median_basis must be 'corpus'", line));
            }
            continue;
        }
        if (key == "data_class_strict") {
            if (value == "true" || value == "1") config.data_class_strict = true;
            else if (value == "false" || value == "0") config.data_class_strict = false;
            else throw InputError(fmt::format("thresholds line {}: data_class_strict must be true or false", line));
            continue;
        }
        auto it = std::find_if(threshold_keys().begin(), threshold_keys().end(),
                               [&](const ThresholdKey& k) { return k.name == key; });
        if (it == threshold_keys().end()) throw InputError(fmt::format("thresholds line {}: unknown key '{}'", line, key));
        auto number = parse_number(value);
        if (!number) throw InputError(fmt::format("thresholds line {}: '{}' is not a number", line, value));
        config.*(it->member) = *number;
    }
    validate(config);
    return config;
}

ThresholdConfig load_thresholds(const std::filesystem::path& path)
{
    return parse_thresholds(read_text_file(path));
}

std::string thresholds_to_text(const ThresholdConfig& config)
{
    std::string out;
    for (const auto& key : threshold_keys()) out += fmt::format("{} = {}\n", key.name, format_number(config.*key.member));
    out += fmt::format("data_class_strict = {}\n", config.data_class_strict ? "true" : "false");
    out += "hub_median_basis = corpus\n";
    return out;
}

} // namespace smellvuln
