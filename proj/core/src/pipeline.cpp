#include "smellvuln/pipeline.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "key_value.hpp"
#include "smellvuln/corpus.hpp"
#include "smellvuln/error.hpp"
#include "smellvuln/facts_io.hpp"
#include "smellvuln/labels.hpp"
#include "smellvuln/metrics.hpp"
#include "text_io.hpp"

namespace smellvuln {

namespace fs = std::filesystem;

namespace {

fs::path resolve(const fs::path& base, const std::string& value)
{
    fs::path p(value);
    return p.is_absolute() ? p : base / p;
}

std::vector<std::string> split_commas(std::string_view text)
{
    std::vector<std::string> out;
    while (true) {
        const auto comma = text.find(',');
        out.emplace_back(trim(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

RunConfig parse_run_config(std::string_view text, const fs::path& base_dir)
{
    RunConfig config;
    bool have_labels = false;
    for (const auto& [line, key, value] : parse_key_values(text, "run config")) {
        if (value.empty()) throw InputError(fmt::format("run config line {}: empty value for '{}'", line, key));
        if (key == "labels") {
            config.labels = resolve(base_dir, value);
            have_labels = true;
        } else if (key == "thresholds") {
            config.thresholds = resolve(base_dir, value);
        } else if (key == "out_dir") {
            config.out_dir = resolve(base_dir, value);
        } else if (key == "version") {
            auto parts = split_commas(value);
            if (parts.size() != 4 || std::any_of(parts.begin(), parts.end(), [](const auto& p) { return p.empty(); })) {
                throw InputError(fmt::format("run config line {}: version needs 'system, release, version, path'", line));
            }
            VersionSpec spec{parts[0], parts[1], parts[2], resolve(base_dir, parts[3])};
            for (const auto& other : config.versions) {
                if (other.system == spec.system && other.version == spec.version) {
                    throw InputError(fmt::format("run config line {}: version {} {} listed twice", line, spec.system,
                                                 spec.version));
                }
            }
            config.versions.push_back(std::move(spec));
        } else {
            throw InputError(fmt::format("run config line {}: unknown key '{}'", line, key));
        }
    }
    if (!have_labels) throw InputError("run config: missing 'labels'");
    if (config.versions.empty()) throw InputError("run config: no 'version' entries");
    return config;
}

RunConfig load_run_config(const fs::path& path)
{
    return parse_run_config(read_text_file(path), path.parent_path());
}

CodeFactsModel load_version(const VersionSpec& spec, unsigned threads)
{
    if (spec.source.extension() == ".json" && !fs::is_directory(spec.source)) {
        CodeFactsModel model = read_facts(spec.source);
        if (model.system != spec.system || model.version != spec.version) {
            throw InputError(fmt::format("facts file '{}' holds {} {}, expected {} {}", spec.source.string(),
                                         model.system, model.version, spec.system, spec.version));
        }
        return model;
    }
    return parse_corpus(spec.source, spec.system, spec.version, ParseOptions{threads});
}

std::string safe_file_stem(std::string_view text)
{
    std::string out;
    for (char c : text) {
        const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_';
        out += ok ? c : '_';
    }
    return out;
}

PipelineResult run_pipeline(const RunConfig& config, const std::optional<fs::path>& thresholds_override,
                            unsigned threads)
{
    // Inputs that can fail cheaply come first.
    const LabelFile labels = load_labels(config.labels);
    ThresholdConfig thresholds;
    if (thresholds_override) thresholds = load_thresholds(*thresholds_override);
    else if (config.thresholds) thresholds = load_thresholds(*config.thresholds);

    PipelineResult result;
    result.warnings = labels.warnings;

    struct Version {
        CodeFactsModel model;
        std::vector<SmellInstance> smells;
    };
    std::vector<Version> versions;
    versions.reserve(config.versions.size());
    nlohmann::ordered_json version_info = nlohmann::ordered_json::array();

    for (const auto& spec : config.versions) {
        Version v;
        v.model = load_version(spec, threads);
        const MetricSet metrics = compute_metrics(v.model);
        v.smells = detect_smells(metrics, v.model, thresholds);

        const std::string stem = safe_file_stem(spec.system + "-" + spec.version);
        result.files["facts/" + stem + ".json"] = facts_to_json(v.model);
        result.files["metrics/" + stem + ".csv"] = metrics_to_csv(metrics);
        result.files["smells/" + stem + ".csv"] = smells_to_csv(v.smells);
        for (const auto& s : v.model.skipped) {
            result.warnings.push_back(fmt::format("{} {}: skipped {}: {}", spec.system, spec.version, s.path, s.message));
        }
        version_info.push_back({{"system", spec.system},
                                {"release", spec.release},
                                {"version", spec.version},
                                {"classes", v.model.classes.size()},
                                {"smell_instances", v.smells.size()},
                                {"skipped_files", v.model.skipped.size()}});
        versions.push_back(std::move(v));
    }

    // Group versions into releases in first-seen order.
    std::vector<ReleaseInput> releases;
    for (std::size_t i = 0; i < config.versions.size(); ++i) {
        const auto& spec = config.versions[i];
        auto it = std::find_if(releases.begin(), releases.end(), [&](const ReleaseInput& r) {
            return r.system == spec.system && r.release == spec.release;
        });
        if (it == releases.end()) {
            releases.push_back(ReleaseInput{spec.system, spec.release, {}, {}});
            it = std::prev(releases.end());
        }
        it->models.push_back(&versions[i].model);
        it->smells.push_back(&versions[i].smells);
    }

    nlohmann::ordered_json threshold_json = nlohmann::ordered_json::object();
    for (const auto& key : threshold_keys()) threshold_json[std::string(key.name)] = thresholds.*key.member;
    threshold_json["data_class_strict"] = thresholds.data_class_strict;
    threshold_json["hub_median_basis"] = "corpus";
    const nlohmann::ordered_json extra{
        {"thresholds", threshold_json},
        {"versions", version_info},
        {"warnings", result.warnings},
    };

    CorrelationOutputs correlation = correlate(releases, labels.labels, extra.dump());
    for (auto& [name, content] : correlation.files) result.files[name] = std::move(content);
    result.files["thresholds.txt"] = thresholds_to_text(thresholds);
    return result;
}

void write_outputs(const std::map<std::string, std::string>& files, const fs::path& out_dir)
{
    std::vector<fs::path> written;
    try {
        for (const auto& [name, content] : files) {
            const fs::path path = out_dir / name;
            write_text_file(path, content);
            written.push_back(path);
        }
    } catch (...) {
        std::error_code ec;
        for (const auto& p : written) fs::remove(p, ec);
        throw;
    }
}

} // namespace smellvuln
