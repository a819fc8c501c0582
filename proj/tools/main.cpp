// Command-line front end: facts, metrics, smells, correlate, report, run.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "smellvuln/corpus.hpp"
#include "smellvuln/error.hpp"
#include "smellvuln/facts_io.hpp"
#include "smellvuln/labels.hpp"
#include "smellvuln/metrics.hpp"
#include "smellvuln/pipeline.hpp"
#include "smellvuln/report.hpp"
#include "smellvuln/smells.hpp"
#include "smellvuln/thresholds.hpp"

namespace fs = std::filesystem;
using namespace smellvuln;

namespace {

struct Globals {
    std::string out_dir;
    std::string thresholds;
    std::string format = "csv";
    bool quiet = false;
};

void note(const Globals& g, const std::string& message)
{
    if (!g.quiet) std::cerr << message << '\n';
}

/// Writes to `out` if given, else to `<out-dir>/<fallback>` if --out-dir is
/// set, else to stdout.
void emit(const Globals& g, const std::string& out, const std::string& fallback, const std::string& content)
{
    if (!out.empty()) {
        write_outputs({{fs::path(out).filename().string(), content}}, fs::path(out).parent_path());
    } else if (!g.out_dir.empty()) {
        write_outputs({{fallback, content}}, g.out_dir);
    } else {
        std::cout << content;
    }
}

ThresholdConfig thresholds_of(const Globals& g)
{
    return g.thresholds.empty() ? ThresholdConfig{} : load_thresholds(g.thresholds);
}

std::string metrics_json(const MetricSet& metrics)
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto* group : {&metrics.methods(), &metrics.classes(), &metrics.packages()}) {
        for (const auto& r : *group) {
            out.push_back({{"entity", r.entity}, {"granularity", to_string(r.granularity)}, {"values", r.values}});
        }
    }
    return out.dump(2) + "\n";
}

std::string smells_json(const std::vector<SmellInstance>& smells)
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& s : smells) {
        out.push_back({{"smell_id", to_string(s.smell_id)},
                       {"label", smell_label(s)},
                       {"granularity", to_string(s.granularity)},
                       {"anchor", s.anchor},
                       {"lifted_classes", s.lifted_classes},
                       {"evidence", s.evidence}});
    }
    return out.dump(2) + "\n";
}

std::vector<CodeFactsModel> read_all_facts(const std::vector<std::string>& paths)
{
    std::vector<CodeFactsModel> out;
    for (const auto& p : paths) out.push_back(read_facts(p));
    return out;
}

std::vector<ReleaseInput> group_releases(const std::vector<CodeFactsModel>& models,
                                         const std::vector<std::vector<SmellInstance>>* smells,
                                         const std::vector<std::string>& releases)
{
    if (!releases.empty() && releases.size() != models.size()) {
        throw InputError("--release must be given once per --facts file");
    }
    std::vector<ReleaseInput> out;
    for (std::size_t i = 0; i < models.size(); ++i) {
        const std::string release = releases.empty() ? models[i].version : releases[i];
        auto it = std::find_if(out.begin(), out.end(), [&](const ReleaseInput& r) {
            return r.system == models[i].system && r.release == release;
        });
        if (it == out.end()) {
            out.push_back(ReleaseInput{models[i].system, release, {}, {}});
            it = std::prev(out.end());
        }
        it->models.push_back(&models[i]);
        if (smells != nullptr) it->smells.push_back(&(*smells)[i]);
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Code and architectural smell detection with vulnerability correlation"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--out-dir", g.out_dir, "Directory for output files");
    app.add_option("--thresholds", g.thresholds, "Threshold config file (key = value)");
    app.add_option("--format", g.format, "Output format for metrics and smells")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--quiet", g.quiet, "Suppress progress and warnings on stderr");

    unsigned threads = 0;

    // facts
    auto* facts = app.add_subcommand("facts", "Parse a Java source tree into a facts file");
    std::string source_root, system, version, facts_out;
    facts->add_option("source_root", source_root, "Source directory")->required();
    facts->add_option("--system", system, "System name")->required();
    facts->add_option("--version", version, "Version label")->required();
    facts->add_option("--out", facts_out, "Output facts file");
    facts->add_option("--threads", threads, "Parser threads (0 = hardware concurrency)");

    // metrics
    auto* metrics = app.add_subcommand("metrics", "Compute method, class and package metrics");
    std::string metrics_facts, metrics_out;
    metrics->add_option("--facts", metrics_facts, "Facts file")->required();
    metrics->add_option("--out", metrics_out, "Output file");

    // smells
    auto* smells = app.add_subcommand("smells", "Detect smells and lift them to classes");
    std::string smells_facts, smells_out;
    smells->add_option("--facts", smells_facts, "Facts file")->required();
    smells->add_option("--out", smells_out, "Output file");

    // correlate
    auto* correlate_cmd = app.add_subcommand("correlate", "Contingency tables, Fisher and chi-square tests");
    std::vector<std::string> corr_facts, corr_smells, corr_releases;
    std::string corr_labels;
    correlate_cmd->add_option("--facts", corr_facts, "Facts files, one per version")->required();
    correlate_cmd->add_option("--smells", corr_smells, "Smells CSV files, paired with --facts")->required();
    correlate_cmd->add_option("--labels", corr_labels, "Vulnerability labels CSV")->required();
    correlate_cmd->add_option("--release", corr_releases, "Major release of each --facts file (default: its version)");

    // report
    auto* report = app.add_subcommand("report", "Corpus summary and smell distribution");
    std::vector<std::string> rep_facts, rep_smells, rep_releases;
    std::string rep_labels;
    report->add_option("--facts", rep_facts, "Facts files, one per version")->required();
    report->add_option("--release", rep_releases, "Major release of each --facts file (default: its version)");
    report->add_option("--smells", rep_smells, "Smells CSV files, paired with --facts (enables the distribution)");
    report->add_option("--labels", rep_labels, "Vulnerability labels CSV (enables the distribution)");

    // run
    auto* run = app.add_subcommand("run", "Full pipeline from a run config");
    std::string run_config;
    run->add_option("config", run_config, "Run config file")->required();
    run->add_option("--threads", threads, "Parser threads (0 = hardware concurrency)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*facts) {
            const CodeFactsModel model = parse_corpus(source_root, system, version, ParseOptions{threads});
            for (const auto& s : model.skipped) note(g, fmt::format("skipped {}: {}", s.path, s.message));
            emit(g, facts_out, safe_file_stem(system + "-" + version) + ".json", facts_to_json(model));
            note(g, fmt::format("{} classes, {} relations", model.classes.size(), model.relations.size()));
        } else if (*metrics) {
            const MetricSet m = compute_metrics(read_facts(metrics_facts));
            emit(g, metrics_out, "metrics." + g.format, g.format == "json" ? metrics_json(m) : metrics_to_csv(m));
        } else if (*smells) {
            const CodeFactsModel model = read_facts(smells_facts);
            const auto found = detect_smells(compute_metrics(model), model, thresholds_of(g));
            emit(g, smells_out, "smells." + g.format, g.format == "json" ? smells_json(found) : smells_to_csv(found));
            note(g, fmt::format("{} smell instances", found.size()));
        } else if (*correlate_cmd) {
            if (corr_smells.size() != corr_facts.size()) throw InputError("--smells must be given once per --facts file");
            const auto models = read_all_facts(corr_facts);
            std::vector<std::vector<SmellInstance>> detections;
            for (const auto& path : corr_smells) detections.push_back(load_smells(path));
            const LabelFile labels = load_labels(corr_labels);
            for (const auto& w : labels.warnings) note(g, w);
            auto outputs = correlate(group_releases(models, &detections, corr_releases), labels.labels);
            write_outputs(outputs.files, g.out_dir.empty() ? fs::path(".") : fs::path(g.out_dir));
            note(g, fmt::format("{} unmatched labels", outputs.unmatched.size()));
        } else if (*report) {
            const auto models = read_all_facts(rep_facts);
            const bool with_distribution = !rep_labels.empty() || !rep_smells.empty();
            if (with_distribution && (rep_labels.empty() || rep_smells.size() != rep_facts.size())) {
                throw InputError("the distribution needs --labels and one --smells file per --facts file");
            }
            std::vector<std::vector<SmellInstance>> detections;
            for (const auto& path : rep_smells) detections.push_back(load_smells(path));
            const auto releases = group_releases(models, with_distribution ? &detections : nullptr, rep_releases);
            if (with_distribution) {
                const LabelFile labels = load_labels(rep_labels);
                auto outputs = correlate(releases, labels.labels);
                std::map<std::string, std::string> files{{"summary.csv", outputs.files.at("summary.csv")},
                                                         {"distribution.csv", outputs.files.at("distribution.csv")}};
                if (g.out_dir.empty()) {
                    std::cout << files["summary.csv"] << '\n' << files["distribution.csv"];
                } else {
                    write_outputs(files, g.out_dir);
                }
            } else {
                std::string out = "system,release,versions,classes,methods,loc\n";
                for (const auto& r : releases) {
                    CorpusSummary s = summarize_corpus(*r.models.back());
                    std::string versions;
                    for (const auto* m : r.models) versions += (versions.empty() ? "" : ";") + m->version;
                    out += fmt::format("{},{},{},{},{},{}\n", r.system, r.release, versions, s.class_count,
                                       s.method_count, s.loc);
                }
                emit(g, "", "summary.csv", out);
            }
        } else if (*run) {
            const RunConfig config = load_run_config(run_config);
            const fs::path out_dir = !g.out_dir.empty() ? fs::path(g.out_dir)
                                     : config.out_dir ? *config.out_dir
                                                      : throw InputError("no output directory: pass --out-dir or set out_dir");
            std::optional<fs::path> override_thresholds;
            if (!g.thresholds.empty()) override_thresholds = fs::path(g.thresholds);
            const PipelineResult result = run_pipeline(config, override_thresholds, threads);
            for (const auto& w : result.warnings) note(g, w);
            write_outputs(result.files, out_dir);
            note(g, fmt::format("wrote {} files to {}", result.files.size(), out_dir.string()));
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
