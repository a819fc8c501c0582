#include "smellvuln/report.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "smellvuln/csv.hpp"
#include "smellvuln/error.hpp"

namespace smellvuln {

namespace {

using ojson = nlohmann::ordered_json;

std::int64_t count_of(const std::map<std::string, std::int64_t>& counts, const std::string& key)
{
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
}

double mean(std::int64_t total, std::size_t n) { return n == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(n); }

ojson nullable(bool present, double value) { return present ? ojson(value) : ojson(nullptr); }

ojson to_json(const TestResult& r)
{
    return ojson{
        {"a", r.table.a},
        {"b", r.table.b},
        {"c", r.table.c},
        {"d", r.table.d},
        {"fisher_p", r.p_value},
        {"degenerate", r.degenerate},
        {"odds_ratio", r.odds_ratio},
        {"df", r.df},
        {"chi_square_computable", r.chi_square_computable},
        {"chi_square", nullable(r.chi_square_computable, r.chi_square)},
        {"chi_square_p", nullable(r.chi_square_computable, r.chi_square_p)},
        {"chi_square_yates", nullable(r.chi_square_computable, r.chi_square_yates)},
        {"chi_square_yates_p", nullable(r.chi_square_computable, r.chi_square_yates_p)},
        {"reject_at_05", r.reject_at_05},
        {"display", format_chi_cell(r)},
    };
}

ojson to_json(const CorpusSummary& s)
{
    return ojson{{"system", s.system},           {"release", s.release},
                 {"versions", s.versions},       {"classes", s.class_count},
                 {"methods", s.method_count},    {"loc", s.loc}};
}

ojson to_json(const DistributionReport& d)
{
    return ojson{
        {"vulnerable_smelly", d.vulnerable_smelly},
        {"vulnerable_clean", d.vulnerable_clean},
        {"vulnerabilities_in_smelly", d.vulnerabilities_in_smelly},
        {"smells_in_smelly_vulnerable", d.smells_in_smelly_vulnerable},
        {"neutral_smelly", d.neutral_smelly},
        {"neutral_clean", d.neutral_clean},
        {"vulnerabilities_in_smelly_neutral", d.vulnerabilities_in_smelly_neutral},
        {"smells_in_smelly_neutral", d.smells_in_smelly_neutral},
        {"mean_smells_vulnerable", d.mean_smells_vulnerable},
        {"mean_smells_neutral", d.mean_smells_neutral},
        {"raw_smells_vulnerable", d.raw_smells_vulnerable},
        {"raw_smells_neutral", d.raw_smells_neutral},
    };
}

std::string table3_row(const std::string& system, const std::string& release, const TestResult& r)
{
    return csv_row({system, release, std::to_string(r.table.a), std::to_string(r.table.b), std::to_string(r.table.c),
                    std::to_string(r.table.d), format_p(r.p_value), format_2dp(r.odds_ratio)});
}

} // namespace

SmellPresence smell_presence(const std::vector<const std::vector<SmellInstance>*>& versions)
{
    SmellPresence presence;
    for (const auto* instances : versions) {
        for (const auto& s : *instances) {
            const std::string label = smell_label(s);
            for (const auto& cls : s.lifted_classes) presence[cls].insert(label);
        }
    }
    return presence;
}

ContingencyTable build_rq1_table(const LabeledClassSet& labeled, const std::map<std::string, bool>& smelly)
{
    ContingencyTable t;
    auto lookup = [&](const std::string& cls) {
        auto it = smelly.find(cls);
        if (it == smelly.end()) throw InvariantError(fmt::format("no smell presence recorded for class '{}'", cls));
        return it->second;
    };
    for (const auto& cls : labeled.vulnerable) ++(lookup(cls) ? t.a : t.b);
    for (const auto& cls : labeled.neutral) ++(lookup(cls) ? t.c : t.d);
    return t;
}

namespace {
template <typename Pred>
std::map<std::string, bool> presence_map(const LabeledClassSet& labeled, Pred has)
{
    std::map<std::string, bool> out;
    for (const auto* group : {&labeled.vulnerable, &labeled.neutral}) {
        for (const auto& cls : *group) out[cls] = has(cls);
    }
    return out;
}
} // namespace

ContingencyTable any_smell_table(const LabeledClassSet& labeled, const SmellPresence& presence)
{
    return build_rq1_table(labeled, presence_map(labeled, [&](const std::string& cls) {
                               auto it = presence.find(cls);
                               return it != presence.end() && !it->second.empty();
                           }));
}

ContingencyTable smell_table(const LabeledClassSet& labeled, const SmellPresence& presence, const std::string& label)
{
    return build_rq1_table(labeled, presence_map(labeled, [&](const std::string& cls) {
                               auto it = presence.find(cls);
                               return it != presence.end() && it->second.contains(label);
                           }));
}

std::map<std::string, TestResult> per_smell_tests(const LabeledClassSet& labeled, const SmellPresence& presence)
{
    std::map<std::string, TestResult> out;
    for (const auto& label : smell_labels()) out[label] = run_tests(smell_table(labeled, presence, label));
    return out;
}

CorpusSummary summarize_corpus(const CodeFactsModel& model)
{
    CorpusSummary s;
    s.system = model.system;
    s.versions = {model.version};
    s.class_count = static_cast<std::int64_t>(model.classes.size());
    for (const auto& c : model.classes) s.method_count += static_cast<std::int64_t>(c.methods.size());
    for (const auto& f : model.files) s.loc += f.loc;
    return s;
}

SmellCounts count_smells(const std::vector<const std::vector<SmellInstance>*>& versions)
{
    SmellCounts counts;
    std::map<std::string, std::set<std::pair<std::string, std::string>>> distinct;
    for (const auto* instances : versions) {
        for (const auto& s : *instances) {
            const std::string label = smell_label(s);
            for (const auto& cls : s.lifted_classes) {
                ++counts.raw[cls];
                distinct[cls].emplace(label, s.anchor);
            }
        }
    }
    for (const auto& [cls, keys] : distinct) counts.distinct[cls] = static_cast<std::int64_t>(keys.size());
    return counts;
}

DistributionReport distribution(const LabeledClassSet& labeled, const SmellCounts& counts)
{
    DistributionReport d;
    d.system = labeled.system;
    d.release = labeled.major_release;
    std::int64_t vulnerable_total = 0, neutral_total = 0;
    for (const auto& cls : labeled.vulnerable) {
        const std::int64_t n = count_of(counts.distinct, cls);
        vulnerable_total += n;
        d.raw_smells_vulnerable += count_of(counts.raw, cls);
        if (n > 0) {
            ++d.vulnerable_smelly;
            d.vulnerabilities_in_smelly += count_of(labeled.vuln_count_per_class, cls);
            d.smells_in_smelly_vulnerable += n;
        } else {
            ++d.vulnerable_clean;
        }
    }
    for (const auto& cls : labeled.neutral) {
        const std::int64_t n = count_of(counts.distinct, cls);
        neutral_total += n;
        d.raw_smells_neutral += count_of(counts.raw, cls);
        if (n > 0) {
            ++d.neutral_smelly;
            d.smells_in_smelly_neutral += n;
        } else {
            ++d.neutral_clean;
        }
    }
    d.mean_smells_vulnerable = mean(vulnerable_total, labeled.vulnerable.size());
    d.mean_smells_neutral = mean(neutral_total, labeled.neutral.size());
    return d;
}

ReleaseAnalysis analyze_release(const ReleaseInput& input, const std::vector<VulnerabilityLabel>& labels)
{
    if (input.models.empty() || input.models.size() != input.smells.size()) {
        throw InvariantError(fmt::format("release {} {}: versions and detections do not line up", input.system, input.release));
    }
    ReleaseAnalysis a;
    a.status = assign_status(input.models, labels, input.system, input.release);
    a.presence = smell_presence(input.smells);
    a.summary = summarize_corpus(*input.models.back());
    a.summary.system = input.system;
    a.summary.release = input.release;
    a.summary.versions.clear();
    for (const auto* m : input.models) a.summary.versions.push_back(m->version);
    a.distribution = distribution(a.status.classes, count_smells(input.smells));
    a.rq1 = run_tests(any_smell_table(a.status.classes, a.presence));
    a.per_smell = per_smell_tests(a.status.classes, a.presence);
    return a;
}

CorrelationOutputs correlate(const std::vector<ReleaseInput>& releases, const std::vector<VulnerabilityLabel>& labels,
                             const std::string& extra_bundle_json)
{
    CorrelationOutputs out;

    // Route each label to the release that analyzed its version.
    std::map<std::pair<std::string, std::string>, std::size_t> owner;
    std::set<std::string> systems_seen;
    for (std::size_t i = 0; i < releases.size(); ++i) {
        systems_seen.insert(releases[i].system);
        for (const auto* m : releases[i].models) owner[{releases[i].system, m->version}] = i;
    }
    std::vector<std::vector<VulnerabilityLabel>> routed(releases.size());
    for (const auto& label : labels) {
        auto it = owner.find({label.system, label.affected_version});
        if (it != owner.end()) {
            routed[it->second].push_back(label);
        } else {
            out.unmatched.push_back({label.cve_id, label.affected_version, label.class_path,
                                     systems_seen.contains(label.system) ? "no facts for affected version"
                                                                         : "system not analyzed"});
        }
    }

    for (std::size_t i = 0; i < releases.size(); ++i) {
        out.releases.push_back(analyze_release(releases[i], routed[i]));
        const auto& u = out.releases.back().status.unmatched;
        out.unmatched.insert(out.unmatched.end(), u.begin(), u.end());
    }
    std::sort(out.unmatched.begin(), out.unmatched.end());

    // Systems in first-seen order; totals are sums of per-release tables.
    std::vector<std::string> systems;
    for (const auto& r : releases) {
        if (std::find(systems.begin(), systems.end(), r.system) == systems.end()) systems.push_back(r.system);
    }

    std::string table3 = "system,release,a,b,c,d,p,OR\n";
    std::string table4 = "system,smell_id,chi2,chi2_yates,computable,significant_at_05,display\n";
    std::string summary = "system,release,versions,classes,methods,loc\n";
    std::string dist =
        "system,release,vulnerable_smelly,vulnerable_clean,vulnerabilities_in_smelly,smells_in_smelly_vulnerable,"
        "neutral_smelly,neutral_clean,vulnerabilities_in_smelly_neutral,smells_in_smelly_neutral,"
        "mean_smells_vulnerable,mean_smells_neutral,raw_smells_vulnerable,raw_smells_neutral\n";

    ojson bundle_releases = ojson::array();
    ojson bundle_systems = ojson::array();
    ContingencyTable combined;

    for (const auto& system : systems) {
        ContingencyTable total;
        std::map<std::string, ContingencyTable> smell_totals;
        for (std::size_t i = 0; i < releases.size(); ++i) {
            if (releases[i].system != system) continue;
            const ReleaseAnalysis& a = out.releases[i];
            total += a.rq1.table;
            for (const auto& [label, r] : a.per_smell) smell_totals[label] += r.table;

            table3 += table3_row(system, releases[i].release, a.rq1);
            std::string versions;
            for (const auto& v : a.summary.versions) versions += (versions.empty() ? "" : ";") + v;
            summary += csv_row({system, releases[i].release, versions, std::to_string(a.summary.class_count),
                                std::to_string(a.summary.method_count), std::to_string(a.summary.loc)});
            const auto& d = a.distribution;
            dist += csv_row({system, releases[i].release, std::to_string(d.vulnerable_smelly),
                             std::to_string(d.vulnerable_clean), std::to_string(d.vulnerabilities_in_smelly),
                             std::to_string(d.smells_in_smelly_vulnerable), std::to_string(d.neutral_smelly),
                             std::to_string(d.neutral_clean), std::to_string(d.vulnerabilities_in_smelly_neutral),
                             std::to_string(d.smells_in_smelly_neutral), fmt::format("{:.1f}", d.mean_smells_vulnerable),
                             fmt::format("{:.1f}", d.mean_smells_neutral), std::to_string(d.raw_smells_vulnerable),
                             std::to_string(d.raw_smells_neutral)});

            ojson per_smell = ojson::object();
            for (const auto& label : smell_labels()) per_smell[label] = to_json(a.per_smell.at(label));
            bundle_releases.push_back(ojson{
                {"system", system},
                {"release", releases[i].release},
                {"summary", to_json(a.summary)},
                {"vulnerable_classes", a.status.classes.vulnerable.size()},
                {"neutral_classes", a.status.classes.neutral.size()},
                {"distribution", to_json(a.distribution)},
                {"fisher", to_json(a.rq1)},
                {"per_smell", per_smell},
            });
        }
        combined += total;
        const TestResult total_result = run_tests(total);
        table3 += table3_row(system, "Total", total_result);

        ojson per_smell = ojson::object();
        for (const auto& label : smell_labels()) {
            const TestResult r = run_tests(smell_totals[label]);
            per_smell[label] = to_json(r);
            const bool ok = r.chi_square_computable;
            table4 += csv_row({system, label, ok ? format_2dp(r.chi_square) : "-", ok ? format_2dp(r.chi_square_yates) : "-",
                               ok ? "true" : "false", r.reject_at_05 ? "true" : "false", format_chi_cell(r)});
        }
        bundle_systems.push_back(ojson{{"system", system}, {"fisher", to_json(total_result)}, {"per_smell", per_smell}});
    }
    const TestResult combined_result = run_tests(combined);
    table3 += table3_row("Combined", "", combined_result);

    std::string unmatched_csv = unmatched_to_csv(out.unmatched);

    ojson bundle{
        {"bundle_schema", 1},
        {"releases", bundle_releases},
        {"systems", bundle_systems},
        {"combined", ojson{{"fisher", to_json(combined_result)}}},
        {"unmatched_labels", out.unmatched.size()},
        {"notes",
         ojson::array({"Package-level smells (Unstable Dependency, Package Cyclic Dependency) are lifted to every class "
                       "of the package.",
                       "Smell counts per class are distinct (smell, anchor) pairs across the versions of a release; "
                       "raw_smells_* sum instances per version before deduplication.",
                       "Classes are identified across versions by qualified name; a renamed class is a different "
                       "class."})},
    };
    const ojson extra = ojson::parse(extra_bundle_json);
    for (auto it = extra.begin(); it != extra.end(); ++it) bundle[it.key()] = it.value();

    out.files["table3.csv"] = std::move(table3);
    out.files["table4.csv"] = std::move(table4);
    out.files["summary.csv"] = std::move(summary);
    out.files["distribution.csv"] = std::move(dist);
    out.files["unmatched_labels.csv"] = std::move(unmatched_csv);
    out.files["bundle.json"] = bundle.dump(2) + "\n";
    return out;
}

} // namespace smellvuln
