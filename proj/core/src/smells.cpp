#include "smellvuln/smells.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "smellvuln/csv.hpp"
#include "smellvuln/error.hpp"
#include "smellvuln/graph.hpp"
#include "text_io.hpp"

namespace smellvuln {

namespace {

constexpr std::array<std::pair<SmellId, std::string_view>, kSmellCount> kSmellNames{{
    {SmellId::GodClass, "God Class"},
    {SmellId::LazyClass, "Lazy Class"},
    {SmellId::ComplexClass, "Complex Class"},
    {SmellId::LargeClass, "Large Class"},
    {SmellId::DataClass, "Data Class"},
    {SmellId::RefusedBequest, "Refused Bequest"},
    {SmellId::BrainClass, "Brain Class"},
    {SmellId::HubLikeDependency, "Hub-Like Dependency"},
    {SmellId::FeatureEnvy, "Feature Envy"},
    {SmellId::LongMethod, "Long Method"},
    {SmellId::LongParameterList, "Long Parameter List"},
    {SmellId::BrainMethod, "Brain Method"},
    {SmellId::ShotgunSurgery, "Shotgun Surgery"},
    {SmellId::CyclicDependency, "Cyclic Dependency"},
    {SmellId::UnstableDependency, "Unstable Dependency"},
    {SmellId::UnhealthyInheritanceHierarchy, "Unhealthy Inheritance Hierarchy"},
}};

double median(std::vector<double> values)
{
    if (values.empty()) return 0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : (values[mid - 1] + values[mid]) / 2;
}

const MetricRecord& require(const MetricRecord* record, std::string_view entity)
{
    if (record == nullptr) throw InvariantError(fmt::format("no metrics for '{}'", entity));
    return *record;
}

SmellInstance make(SmellId id, Granularity g, std::string anchor, std::map<std::string, double> evidence)
{
    SmellInstance s{id, g, std::move(anchor), {}, std::move(evidence)};
    if (g == Granularity::Class) s.lifted_classes.insert(s.anchor);
    return s;
}

bool brain_method(const MetricRecord& m, const ThresholdConfig& t)
{
    return m.at("LOC") > t.brain_method_loc && m.at("CYCLO") >= t.high_cyclo && m.at("MAXNESTING") >= t.brain_nesting &&
           m.at("NOAV") > t.brain_noav;
}

bool god_class(const MetricRecord& c, const ThresholdConfig& t)
{
    return c.at("ATFD") > t.few && c.at("WMC") >= t.very_high_wmc && c.at("TCC") < t.one_third;
}

} // namespace

std::string_view to_string(SmellId id)
{
    for (const auto& [s, name] : kSmellNames) {
        if (s == id) return name;
    }
    return "?";
}

std::optional<SmellId> parse_smell_id(std::string_view text)
{
    for (const auto& [s, name] : kSmellNames) {
        if (name == text) return s;
    }
    return std::nullopt;
}

const std::array<SmellId, kSmellCount>& all_smells()
{
    static const std::array<SmellId, kSmellCount> ids = [] {
        std::array<SmellId, kSmellCount> out{};
        for (std::size_t i = 0; i < kSmellCount; ++i) out[i] = kSmellNames[i].first;
        return out;
    }();
    return ids;
}

std::string smell_label(const SmellInstance& instance)
{
    if (instance.smell_id == SmellId::CyclicDependency) {
        return instance.granularity == Granularity::Package ? "Package Cyclic Dependency" : "Class Cyclic Dependency";
    }
    return std::string(to_string(instance.smell_id));
}

const std::vector<std::string>& smell_labels()
{
    static const std::vector<std::string> labels{
        "God Class",          "Lazy Class",          "Complex Class",
        "Large Class",        "Refused Bequest",     "Data Class",
        "Feature Envy",       "Brain Class",         "Hub-Like Dependency",
        "Class Cyclic Dependency", "Unhealthy Inheritance Hierarchy", "Long Method",
        "Long Parameter List", "Shotgun Surgery",    "Brain Method",
        "Unstable Dependency", "Package Cyclic Dependency",
    };
    return labels;
}

std::vector<SmellInstance> detect_class_smells(const MetricSet& metrics, const CodeFactsModel& model,
                                               const ThresholdConfig& t)
{
    std::vector<double> fan_ins, fan_outs;
    for (const auto& c : metrics.classes()) {
        fan_ins.push_back(c.at("fan_in"));
        fan_outs.push_back(c.at("fan_out"));
    }
    const double median_in = median(fan_ins);
    const double median_out = median(fan_outs);
    const ModelIndex index(model);

    std::vector<SmellInstance> out;
    for (const auto& cls : model.classes) {
        const MetricRecord& c = require(metrics.cls(cls.qualified_name), cls.qualified_name);
        const double loc = c.at("LOC"), nom = c.at("NOM"), wmc = c.at("WMC"), atfd = c.at("ATFD"), tcc = c.at("TCC");

        double max_cyclo = 0, brain_methods = 0;
        for (const auto& m : cls.methods) {
            const MetricRecord& mm = require(metrics.method(m.qualified_name), m.qualified_name);
            max_cyclo = std::max(max_cyclo, mm.at("CYCLO"));
            if (brain_method(mm, t)) ++brain_methods;
        }
        const bool is_god = god_class(c, t);
        const auto& name = cls.qualified_name;

        if (is_god) {
            out.push_back(make(SmellId::GodClass, Granularity::Class, name, {{"ATFD", atfd}, {"WMC", wmc}, {"TCC", tcc}}));
        }
        if (loc < t.lazy_class_loc && nom <= t.lazy_class_nom && wmc <= t.lazy_class_nom) {
            out.push_back(make(SmellId::LazyClass, Granularity::Class, name, {{"LOC", loc}, {"NOM", nom}, {"WMC", wmc}}));
        }
        if (max_cyclo >= t.high_cyclo) {
            out.push_back(make(SmellId::ComplexClass, Granularity::Class, name, {{"max_CYCLO", max_cyclo}}));
        }
        if (loc >= t.large_class_loc) {
            out.push_back(make(SmellId::LargeClass, Granularity::Class, name, {{"LOC", loc}}));
        }

        const double woc = c.at("WOC"), exposed = c.at("NOPA") + c.at("NOAM");
        bool data_class = false;
        if (t.data_class_strict) {
            data_class = woc < t.one_third &&
                         ((exposed > t.few && wmc < t.high_wmc) || (exposed > t.many && wmc < t.very_high_wmc));
        } else {
            data_class = woc < t.one_third && exposed > t.few && wmc < t.very_high_wmc;
        }
        if (data_class) {
            out.push_back(make(SmellId::DataClass, Granularity::Class, name,
                               {{"WOC", woc}, {"NOPA", c.at("NOPA")}, {"NOAM", c.at("NOAM")}, {"WMC", wmc}}));
        }

        const bool has_parent = !index.superclass_chain(cls).empty();
        const double bur = c.at("BUR"), bovr = c.at("BOvR"), nprotm = c.at("NProtM");
        if (has_parent && (bur < t.one_third || bovr < t.one_third) && nprotm > 0) {
            out.push_back(make(SmellId::RefusedBequest, Granularity::Class, name,
                               {{"BUR", bur}, {"BOvR", bovr}, {"NProtM", nprotm}}));
        }

        if (brain_methods >= 1 && wmc >= t.very_high_wmc && tcc < t.half && !is_god) {
            out.push_back(make(SmellId::BrainClass, Granularity::Class, name,
                               {{"brain_methods", brain_methods}, {"WMC", wmc}, {"TCC", tcc}, {"ATFD", atfd}}));
        }

        const double fin = c.at("fan_in"), fout = c.at("fan_out");
        if (fin > median_in && fout > median_out && std::abs(fin - fout) < (fin + fout) / 4) {
            out.push_back(make(SmellId::HubLikeDependency, Granularity::Class, name,
                               {{"fan_in", fin}, {"fan_out", fout}, {"median_fan_in", median_in}, {"median_fan_out", median_out}}));
        }
    }
    return out;
}

std::vector<SmellInstance> detect_method_smells(const MetricSet& metrics, const CodeFactsModel& model,
                                                const ThresholdConfig& t)
{
    std::vector<SmellInstance> out;
    for (const auto& cls : model.classes) {
        for (const auto& method : cls.methods) {
            const auto& name = method.qualified_name;
            const MetricRecord& m = require(metrics.method(name), name);
            const double atfd = m.at("ATFD_m"), laa = m.at("LAA"), fdp = m.at("FDP"), loc = m.at("LOC");
            if (atfd > t.few && laa < t.one_third && fdp <= t.few) {
                out.push_back(make(SmellId::FeatureEnvy, Granularity::Method, name,
                                   {{"ATFD_m", atfd}, {"LAA", laa}, {"FDP", fdp}}));
            }
            if (loc > t.long_method_loc) {
                out.push_back(make(SmellId::LongMethod, Granularity::Method, name, {{"LOC", loc}}));
            }
            if (m.at("NOPAR") >= t.long_params) {
                out.push_back(make(SmellId::LongParameterList, Granularity::Method, name, {{"NOPAR", m.at("NOPAR")}}));
            }
            if (brain_method(m, t)) {
                out.push_back(make(SmellId::BrainMethod, Granularity::Method, name,
                                   {{"LOC", loc}, {"CYCLO", m.at("CYCLO")}, {"MAXNESTING", m.at("MAXNESTING")},
                                    {"NOAV", m.at("NOAV")}}));
            }
            if (m.at("CM") >= t.shotgun_cm && m.at("CC") >= t.shotgun_cc) {
                out.push_back(make(SmellId::ShotgunSurgery, Granularity::Method, name, {{"CM", m.at("CM")}, {"CC", m.at("CC")}}));
            }
        }
    }
    return out;
}

std::vector<SmellInstance> detect_architectural_smells(const MetricSet& metrics, const CodeFactsModel& model,
                                                       const ThresholdConfig& t)
{
    const ModelIndex index(model);
    const ClassGraph classes = build_class_graph(index);
    const PackageGraph packages = build_package_graph(index, classes);
    std::vector<SmellInstance> out;

    for (const auto& component : cyclic_components(classes.nodes, classes.out)) {
        for (const auto& c : component) {
            out.push_back(make(SmellId::CyclicDependency, Granularity::Class, c,
                               {{"component_size", static_cast<double>(component.size())}}));
        }
    }
    for (const auto& component : cyclic_components(packages.nodes, packages.out)) {
        for (const auto& p : component) {
            out.push_back(make(SmellId::CyclicDependency, Granularity::Package, p,
                               {{"component_size", static_cast<double>(component.size())}}));
        }
    }

    for (const auto& pkg : packages.nodes) {
        const MetricRecord& p = require(metrics.package(pkg), pkg);
        const double ce = p.at("Ce"), own = p.at("I");
        if (ce == 0) continue;
        double bad = 0;
        for (const auto& target : packages.out.at(pkg)) {
            if (require(metrics.package(target), target).at("I") > own) ++bad;
        }
        if (bad / ce > t.unstable_bad_dep_ratio) {
            out.push_back(make(SmellId::UnstableDependency, Granularity::Package, pkg,
                               {{"I", own}, {"Ce", ce}, {"bad_dependencies", bad}, {"bad_ratio", bad / ce}}));
        }
    }

    // Parent classes whose hierarchy is unhealthy, grouped by file.
    std::map<std::string, std::pair<double, double>> flagged_files; // file -> (parent->child, client->both)
    for (const auto& parent : model.classes) {
        std::vector<std::string> children;
        for (const auto& c : model.classes) {
            if (index.is_ancestor(parent.qualified_name, c.qualified_name)) children.push_back(c.qualified_name);
        }
        if (children.empty()) continue;
        double parent_to_child = 0, client_to_both = 0;
        const auto& parent_deps = classes.out_non_inheritance.at(parent.qualified_name);
        for (const auto& child : children) {
            if (parent_deps.contains(child)) ++parent_to_child;
            for (const auto& client : classes.in.at(child)) {
                if (client == parent.qualified_name || client == child) continue;
                const auto& deps = classes.out_non_inheritance.at(client);
                if (deps.contains(child) && deps.contains(parent.qualified_name)) ++client_to_both;
            }
        }
        if (parent_to_child + client_to_both > 0) {
            auto& [ptc, ctb] = flagged_files[parent.file];
            ptc += parent_to_child;
            ctb += client_to_both;
        }
    }
    for (const auto& [file, counts] : flagged_files) {
        out.push_back(make(SmellId::UnhealthyInheritanceHierarchy, Granularity::File, file,
                           {{"parent_to_child_dependencies", counts.first}, {"client_to_both_dependencies", counts.second}}));
    }
    return out;
}

std::vector<SmellInstance> lift_to_class_level(std::vector<SmellInstance> instances, const CodeFactsModel& model)
{
    const ModelIndex index(model);
    for (auto& s : instances) {
        std::set<std::string> lifted;
        switch (s.granularity) {
        case Granularity::Class:
            if (index.find_class(s.anchor) == nullptr) break;
            lifted.insert(s.anchor);
            break;
        case Granularity::Method:
            if (index.find_method(s.anchor) == nullptr) break;
            lifted.insert(*index.owning_class(s.anchor));
            break;
        case Granularity::File:
            if (const FileEntity* f = index.find_file(s.anchor)) lifted.insert(f->classes.begin(), f->classes.end());
            else throw InvariantError(fmt::format("{} anchored on unknown file '{}'", to_string(s.smell_id), s.anchor));
            break;
        case Granularity::Package:
            if (const PackageEntity* p = index.find_package(s.anchor)) lifted.insert(p->classes.begin(), p->classes.end());
            else throw InvariantError(fmt::format("{} anchored on unknown package '{}'", to_string(s.smell_id), s.anchor));
            break;
        }
        if (lifted.empty()) {
            throw InvariantError(fmt::format("{} anchored on '{}' lifts to no class", to_string(s.smell_id), s.anchor));
        }
        s.lifted_classes = std::move(lifted);
    }
    return instances;
}

void sort_instances(std::vector<SmellInstance>& instances)
{
    std::sort(instances.begin(), instances.end(), [](const SmellInstance& a, const SmellInstance& b) {
        return std::tuple(to_string(a.smell_id), std::string_view(a.anchor), a.granularity) <
               std::tuple(to_string(b.smell_id), std::string_view(b.anchor), b.granularity);
    });
}

std::vector<SmellInstance> detect_smells(const MetricSet& metrics, const CodeFactsModel& model,
                                         const ThresholdConfig& config)
{
    validate(config);
    auto all = detect_class_smells(metrics, model, config);
    for (auto* more : {detect_method_smells, detect_architectural_smells}) {
        auto found = more(metrics, model, config);
        all.insert(all.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    }
    all = lift_to_class_level(std::move(all), model);
    sort_instances(all);
    return all;
}

std::string smells_to_csv(const std::vector<SmellInstance>& instances)
{
    std::string out = "smell_id,granularity,anchor,lifted_class,evidence_json\n";
    for (const auto& s : instances) {
        const std::string evidence = nlohmann::json(s.evidence).dump();
        for (const auto& cls : s.lifted_classes) {
            out += csv_row({std::string(to_string(s.smell_id)), std::string(to_string(s.granularity)), s.anchor, cls, evidence});
        }
    }
    return out;
}

std::vector<SmellInstance> smells_from_csv(std::string_view text)
{
    const auto rows = parse_csv(text);
    const std::vector<std::string> header{"smell_id", "granularity", "anchor", "lifted_class", "evidence_json"};
    if (rows.empty() || rows.front() != header) {
        throw InputError("smells CSV: header must be smell_id,granularity,anchor,lifted_class,evidence_json");
    }
    std::vector<SmellInstance> out;
    std::map<std::tuple<SmellId, Granularity, std::string>, std::size_t> seen;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.size() != header.size()) throw InputError(fmt::format("smells CSV row {}: expected 5 fields", i + 1));
        auto id = parse_smell_id(row[0]);
        if (!id) throw InputError(fmt::format("smells CSV row {}: unknown smell_id '{}'", i + 1, row[0]));
        auto g = parse_granularity(row[1]);
        if (!g) throw InputError(fmt::format("smells CSV row {}: unknown granularity '{}'", i + 1, row[1]));
        auto key = std::tuple(*id, *g, row[2]);
        auto [it, fresh] = seen.try_emplace(key, out.size());
        if (fresh) {
            SmellInstance s{*id, *g, row[2], {}, {}};
            try {
                s.evidence = nlohmann::json::parse(row[4]).get<std::map<std::string, double>>();
            } catch (const nlohmann::json::exception& e) {
                throw InputError(fmt::format("smells CSV row {}: bad evidence_json: {}", i + 1, e.what()));
            }
            out.push_back(std::move(s));
        }
        out[it->second].lifted_classes.insert(row[3]);
    }
    sort_instances(out);
    return out;
}

std::vector<SmellInstance> load_smells(const std::filesystem::path& path)
{
    return smells_from_csv(read_text_file(path));
}

} // namespace smellvuln
