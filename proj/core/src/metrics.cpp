#include "smellvuln/metrics.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

#include <fmt/format.h>

#include "smellvuln/csv.hpp"
#include "smellvuln/error.hpp"

namespace smellvuln {

namespace {

constexpr std::array<std::pair<Granularity, std::string_view>, 4> kGranularities{{
    {Granularity::Method, "method"},
    {Granularity::Class, "class"},
    {Granularity::Package, "package"},
    {Granularity::File, "file"},
}};

double ratio_or(double num, double den, double fallback) { return den == 0 ? fallback : num / den; }

bool inheritable(Visibility v) { return v == Visibility::Public || v == Visibility::Protected; }

/// Attributes a method touches on its own class, used for cohesion.
std::set<std::string> own_attributes(const MethodEntity& m) { return {m.local_accesses.begin(), m.local_accesses.end()}; }

bool touches_attributes(const MethodEntity& m)
{
    return !m.local_accesses.empty() || !m.inherited_accesses.empty() || !m.foreign_accesses.empty();
}

double tight_class_cohesion(const ClassEntity& cls)
{
    std::vector<std::set<std::string>> touching;
    for (const auto& m : cls.methods) {
        if (!m.is_constructor && touches_attributes(m)) touching.push_back(own_attributes(m));
    }
    if (touching.size() < 2) return 1.0;
    std::size_t connected = 0;
    for (std::size_t i = 0; i < touching.size(); ++i) {
        for (std::size_t j = i + 1; j < touching.size(); ++j) {
            const auto& a = touching[i];
            const auto& b = touching[j];
            if (std::any_of(a.begin(), a.end(), [&](const std::string& x) { return b.contains(x); })) ++connected;
        }
    }
    const double pairs = static_cast<double>(touching.size() * (touching.size() - 1) / 2);
    return static_cast<double>(connected) / pairs;
}

bool is_accessor(const MethodEntity& m) { return !m.is_constructor && is_accessor_name(m.name, m.parameters.size()); }

} // namespace

std::string_view to_string(Granularity granularity)
{
    for (const auto& [g, name] : kGranularities) {
        if (g == granularity) return name;
    }
    return "?";
}

std::optional<Granularity> parse_granularity(std::string_view text)
{
    for (const auto& [g, name] : kGranularities) {
        if (name == text) return g;
    }
    return std::nullopt;
}

double MetricRecord::at(std::string_view metric) const
{
    auto it = values.find(std::string(metric));
    if (it == values.end()) throw InvariantError(fmt::format("metric {} missing for '{}'", metric, entity));
    return it->second;
}

std::vector<MetricRecord> compute_method_metrics(const CodeFactsModel& model)
{
    std::map<std::string, std::set<std::string>> callers;
    std::map<std::string, std::set<std::string>> caller_classes;
    for (const auto& cls : model.classes) {
        for (const auto& m : cls.methods) {
            for (const auto& target : m.calls) {
                if (target == m.qualified_name) continue;
                callers[target].insert(m.qualified_name);
                caller_classes[target].insert(cls.qualified_name);
            }
        }
    }

    std::vector<MetricRecord> out;
    for (const auto& cls : model.classes) {
        for (const auto& m : cls.methods) {
            std::set<std::pair<std::string, std::string>> foreign_attrs;
            std::set<std::string> foreign_owners;
            for (const auto& a : m.foreign_accesses) {
                foreign_attrs.emplace(a.owner, a.attribute);
                foreign_owners.insert(a.owner);
            }
            const auto local = static_cast<double>(m.local_accesses.size());
            const auto atfd = static_cast<double>(foreign_attrs.size());

            MetricRecord r{m.qualified_name, Granularity::Method, {}};
            r.values["LOC"] = static_cast<double>(m.loc);
            r.values["CYCLO"] = 1.0 + static_cast<double>(m.decision_points.size());
            r.values["NOPAR"] = static_cast<double>(m.parameters.size());
            r.values["MAXNESTING"] = static_cast<double>(m.max_nesting);
            r.values["NOAV"] = static_cast<double>(m.accessed_variables.size());
            r.values["ATFD_m"] = atfd;
            r.values["LAA"] = ratio_or(local, local + atfd, 1.0);
            r.values["FDP"] = static_cast<double>(foreign_owners.size());
            r.values["CM"] = static_cast<double>(callers[m.qualified_name].size());
            r.values["CC"] = static_cast<double>(caller_classes[m.qualified_name].size());
            out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.entity < b.entity; });
    return out;
}

std::vector<MetricRecord> compute_class_metrics(const CodeFactsModel& model,
                                                const std::vector<MetricRecord>& method_metrics)
{
    std::map<std::string_view, const MetricRecord*> by_method;
    for (const auto& r : method_metrics) by_method[r.entity] = &r;

    const ModelIndex index(model);
    const ClassGraph graph = build_class_graph(index);

    std::vector<MetricRecord> out;
    for (const auto& cls : model.classes) {
        double wmc = 0;
        std::set<std::string> foreign_classes;
        for (const auto& m : cls.methods) {
            auto it = by_method.find(m.qualified_name);
            if (it == by_method.end()) {
                throw InvariantError(fmt::format("no method metrics for '{}'", m.qualified_name));
            }
            wmc += it->second->at("CYCLO");
            for (const auto& a : m.foreign_accesses) foreign_classes.insert(a.owner);
        }

        // Public interface and data exposure.
        double public_methods = 0, functional = 0, accessors = 0, public_attrs = 0;
        for (const auto& m : cls.methods) {
            if (is_accessor(m)) ++accessors;
            if (m.is_constructor || m.visibility != Visibility::Public) continue;
            ++public_methods;
            if (!is_accessor(m)) ++functional;
        }
        for (const auto& f : cls.fields) {
            if (f.visibility == Visibility::Public && !f.is_static) ++public_attrs;
        }

        // Inheritance usage against the in-model superclass chain.
        const auto chain = index.superclass_chain(cls);
        std::set<std::string> inherited_members;   // field or method qualified names
        std::set<std::pair<std::string, std::size_t>> parent_signatures;
        double protected_members = 0;
        for (const ClassEntity* parent : chain) {
            for (const auto& f : parent->fields) {
                if (f.visibility == Visibility::Protected) ++protected_members;
                if (inheritable(f.visibility)) inherited_members.insert(field_qualified_name(parent->qualified_name, f.name));
            }
            for (const auto& m : parent->methods) {
                if (m.is_constructor) continue;
                if (m.visibility == Visibility::Protected) ++protected_members;
                if (inheritable(m.visibility)) inherited_members.insert(m.qualified_name);
                if (m.visibility != Visibility::Private) parent_signatures.emplace(m.name, m.parameters.size());
            }
        }
        std::set<std::string> used;
        double non_ctor = 0, overriding = 0;
        for (const auto& m : cls.methods) {
            for (const auto& a : m.inherited_accesses) {
                const auto fqn = field_qualified_name(a.owner, a.attribute);
                if (inherited_members.contains(fqn)) used.insert(fqn);
            }
            for (const auto& target : m.calls) {
                if (inherited_members.contains(target)) used.insert(target);
            }
            if (m.is_constructor) continue;
            ++non_ctor;
            if (parent_signatures.contains({m.name, m.parameters.size()})) ++overriding;
        }
        const bool has_parent = !chain.empty();

        MetricRecord r{cls.qualified_name, Granularity::Class, {}};
        r.values["LOC"] = static_cast<double>(cls.loc);
        r.values["NOM"] = static_cast<double>(cls.methods.size());
        r.values["NOA"] = static_cast<double>(cls.fields.size());
        r.values["WMC"] = wmc;
        r.values["ATFD"] = static_cast<double>(foreign_classes.size());
        r.values["TCC"] = tight_class_cohesion(cls);
        r.values["WOC"] = ratio_or(functional, public_methods + public_attrs, 1.0);
        r.values["NOPA"] = public_attrs;
        r.values["NOAM"] = accessors;
        r.values["BUR"] = has_parent ? ratio_or(static_cast<double>(used.size()),
                                                static_cast<double>(inherited_members.size()), 1.0)
                                     : 1.0;
        r.values["BOvR"] = has_parent ? ratio_or(overriding, non_ctor, 1.0) : 1.0;
        r.values["NProtM"] = protected_members;
        r.values["fan_in"] = static_cast<double>(graph.in.at(cls.qualified_name).size());
        r.values["fan_out"] = static_cast<double>(graph.out.at(cls.qualified_name).size());
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<MetricRecord> compute_package_metrics(const CodeFactsModel& model)
{
    const ModelIndex index(model);
    const PackageGraph graph = build_package_graph(index, build_class_graph(index));
    std::vector<MetricRecord> out;
    for (const auto& name : graph.nodes) {
        const auto ca = static_cast<double>(graph.in.at(name).size());
        const auto ce = static_cast<double>(graph.out.at(name).size());
        MetricRecord r{name, Granularity::Package, {}};
        r.values["Ca"] = ca;
        r.values["Ce"] = ce;
        r.values["I"] = ratio_or(ce, ca + ce, 0.0);
        out.push_back(std::move(r));
    }
    return out;
}

MetricSet::MetricSet(std::vector<MetricRecord> methods, std::vector<MetricRecord> classes,
                     std::vector<MetricRecord> packages)
    : methods_(std::move(methods)), classes_(std::move(classes)), packages_(std::move(packages))
{
    auto by_entity = [](const MetricRecord& a, const MetricRecord& b) { return a.entity < b.entity; };
    std::sort(methods_.begin(), methods_.end(), by_entity);
    std::sort(classes_.begin(), classes_.end(), by_entity);
    std::sort(packages_.begin(), packages_.end(), by_entity);
    for (std::size_t i = 0; i < methods_.size(); ++i) method_index_[methods_[i].entity] = i;
    for (std::size_t i = 0; i < classes_.size(); ++i) class_index_[classes_[i].entity] = i;
    for (std::size_t i = 0; i < packages_.size(); ++i) package_index_[packages_[i].entity] = i;
}

namespace {
const MetricRecord* find_in(const std::map<std::string, std::size_t, std::less<>>& index,
                            const std::vector<MetricRecord>& records, std::string_view name)
{
    auto it = index.find(name);
    return it == index.end() ? nullptr : &records[it->second];
}
} // namespace

const MetricRecord* MetricSet::method(std::string_view name) const { return find_in(method_index_, methods_, name); }
const MetricRecord* MetricSet::cls(std::string_view name) const { return find_in(class_index_, classes_, name); }
const MetricRecord* MetricSet::package(std::string_view name) const { return find_in(package_index_, packages_, name); }

MetricSet compute_metrics(const CodeFactsModel& model)
{
    auto methods = compute_method_metrics(model);
    auto classes = compute_class_metrics(model, methods);
    return MetricSet(std::move(methods), std::move(classes), compute_package_metrics(model));
}

std::string format_number(double value)
{
    if (value == 0) return "0"; // avoid "-0"
    return fmt::format("{}", value);
}

std::string metrics_to_csv(const MetricSet& metrics)
{
    std::vector<std::tuple<std::string_view, std::string_view, int, const MetricRecord*>> rows;
    for (const auto* group : {&metrics.methods(), &metrics.classes(), &metrics.packages()}) {
        for (const auto& r : *group) {
            for (const auto& [metric, value] : r.values) {
                rows.emplace_back(r.entity, metric, static_cast<int>(r.granularity), &r);
            }
        }
    }
    std::sort(rows.begin(), rows.end());
    std::string out = "entity,granularity,metric,value\n";
    for (const auto& [entity, metric, g, record] : rows) {
        out += fmt::format("{},{},{},{}\n", csv_escape(entity), to_string(record->granularity), metric,
                           format_number(record->values.at(std::string(metric))));
    }
    return out;
}

} // namespace smellvuln
