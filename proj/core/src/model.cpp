#include "smellvuln/model.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include <fmt/format.h>

#include "smellvuln/error.hpp"

namespace smellvuln {

namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::pair<Enum, std::string_view>, N>& table, std::string_view text)
{
    for (const auto& [value, name] : table) {
        if (name == text) return value;
    }
    return std::nullopt;
}

template <typename Enum, std::size_t N>
std::string_view name_of(const std::array<std::pair<Enum, std::string_view>, N>& table, Enum value)
{
    for (const auto& [v, name] : table) {
        if (v == value) return name;
    }
    return "?";
}

constexpr std::array<std::pair<ClassKind, std::string_view>, 3> kClassKinds{{
    {ClassKind::Class, "class"},
    {ClassKind::Interface, "interface"},
    {ClassKind::Enum, "enum"},
}};

constexpr std::array<std::pair<Visibility, std::string_view>, 4> kVisibilities{{
    {Visibility::Public, "public"},
    {Visibility::Protected, "protected"},
    {Visibility::Package, "package"},
    {Visibility::Private, "private"},
}};

constexpr std::array<std::pair<RelationKind, std::string_view>, 5> kRelationKinds{{
    {RelationKind::Inherits, "inherits"},
    {RelationKind::Contains, "contains"},
    {RelationKind::Calls, "calls"},
    {RelationKind::AccessesField, "accesses_field"},
    {RelationKind::DependsOn, "depends_on"},
}};

constexpr std::array<std::pair<DecisionKind, std::string_view>, 9> kDecisionKinds{{
    {DecisionKind::If, "if"},
    {DecisionKind::For, "for"},
    {DecisionKind::While, "while"},
    {DecisionKind::Do, "do"},
    {DecisionKind::Case, "case"},
    {DecisionKind::Catch, "catch"},
    {DecisionKind::Ternary, "?:"},
    {DecisionKind::And, "&&"},
    {DecisionKind::Or, "||"},
}};

template <typename T>
void sort_unique(std::vector<T>& values)
{
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
}

} // namespace

std::string_view to_string(ClassKind kind) { return name_of(kClassKinds, kind); }
std::string_view to_string(Visibility visibility) { return name_of(kVisibilities, visibility); }
std::string_view to_string(RelationKind kind) { return name_of(kRelationKinds, kind); }
std::string_view to_string(DecisionKind kind) { return name_of(kDecisionKinds, kind); }

std::optional<ClassKind> parse_class_kind(std::string_view text) { return lookup(kClassKinds, text); }
std::optional<Visibility> parse_visibility(std::string_view text) { return lookup(kVisibilities, text); }
std::optional<RelationKind> parse_relation_kind(std::string_view text) { return lookup(kRelationKinds, text); }
std::optional<DecisionKind> parse_decision_kind(std::string_view text) { return lookup(kDecisionKinds, text); }

bool is_accessor_name(std::string_view method, std::size_t arity)
{
    if (arity > 1) return false;
    for (std::string_view prefix : {"get", "set", "is"}) {
        if (method.size() > prefix.size() && method.starts_with(prefix) &&
            std::isupper(static_cast<unsigned char>(method[prefix.size()]))) {
            return true;
        }
    }
    return false;
}

std::string accessor_attribute(std::string_view method)
{
    const std::size_t skip = method.starts_with("is") ? 2 : 3;
    std::string attr(method.substr(skip));
    if (!attr.empty()) attr[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(attr[0])));
    return attr;
}

std::string method_qualified_name(std::string_view class_name, std::string_view method, std::size_t arity)
{
    return fmt::format("{}#{}({})", class_name, method, arity);
}

std::string field_qualified_name(std::string_view class_name, std::string_view field)
{
    return fmt::format("{}.{}", class_name, field);
}

void canonicalize(CodeFactsModel& model)
{
    auto by_name = [](const auto& x, const auto& y) { return x.name < y.name; };
    std::sort(model.packages.begin(), model.packages.end(), by_name);
    for (auto& pkg : model.packages) {
        sort_unique(pkg.files);
        sort_unique(pkg.classes);
    }
    std::sort(model.files.begin(), model.files.end(),
              [](const FileEntity& x, const FileEntity& y) { return x.path < y.path; });
    for (auto& file : model.files) sort_unique(file.classes);

    std::sort(model.classes.begin(), model.classes.end(),
              [](const ClassEntity& x, const ClassEntity& y) { return x.qualified_name < y.qualified_name; });
    for (auto& cls : model.classes) {
        std::sort(cls.fields.begin(), cls.fields.end(), by_name);
        std::sort(cls.methods.begin(), cls.methods.end(),
                  [](const MethodEntity& x, const MethodEntity& y) { return x.qualified_name < y.qualified_name; });
        for (auto& m : cls.methods) {
            sort_unique(m.local_accesses);
            sort_unique(m.inherited_accesses);
            sort_unique(m.foreign_accesses);
            sort_unique(m.calls);
            sort_unique(m.accessed_variables);
        }
    }
    sort_unique(model.relations);
    sort_unique(model.skipped);
}

void validate(const CodeFactsModel& model)
{
    std::set<std::string, std::less<>> members; // classes, methods, fields share one namespace
    std::set<std::string, std::less<>> packages;
    std::set<std::string, std::less<>> files;

    auto claim = [](auto& set, const std::string& name, std::string_view what) {
        if (name.empty()) throw ModelError(fmt::format("{} with empty qualified name", what));
        if (!set.insert(name).second) {
            throw ModelError(fmt::format("duplicate qualified name '{}' ({})", name, what));
        }
    };

    for (const auto& pkg : model.packages) claim(packages, pkg.name, "package");
    for (const auto& file : model.files) claim(files, file.path, "file");

    std::map<std::string, const FileEntity*, std::less<>> file_by_path;
    for (const auto& file : model.files) {
        file_by_path.emplace(file.path, &file);
        if (file.loc < 0) throw ModelError(fmt::format("file '{}' has negative loc", file.path));
        if (!packages.contains(file.package)) {
            throw ModelError(fmt::format("file '{}' names unknown package '{}'", file.path, file.package));
        }
    }
    std::map<std::string, const PackageEntity*, std::less<>> pkg_by_name;
    for (const auto& pkg : model.packages) pkg_by_name.emplace(pkg.name, &pkg);

    for (const auto& cls : model.classes) {
        claim(members, cls.qualified_name, "class");
        if (cls.loc < 0) throw ModelError(fmt::format("class '{}' has negative loc", cls.qualified_name));

        auto file = file_by_path.find(cls.file);
        if (file == file_by_path.end()) {
            throw ModelError(fmt::format("class '{}' belongs to unknown file '{}'", cls.qualified_name, cls.file));
        }
        if (!std::binary_search(file->second->classes.begin(), file->second->classes.end(), cls.qualified_name)) {
            throw ModelError(fmt::format("file '{}' does not list class '{}'", cls.file, cls.qualified_name));
        }
        auto pkg = pkg_by_name.find(cls.package);
        if (pkg == pkg_by_name.end()) {
            throw ModelError(fmt::format("class '{}' belongs to unknown package '{}'", cls.qualified_name, cls.package));
        }
        if (!std::binary_search(pkg->second->classes.begin(), pkg->second->classes.end(), cls.qualified_name)) {
            throw ModelError(fmt::format("package '{}' does not list class '{}'", cls.package, cls.qualified_name));
        }
        if (file->second->package != cls.package) {
            throw ModelError(fmt::format("class '{}' and its file '{}' disagree on package", cls.qualified_name, cls.file));
        }

        for (const auto& f : cls.fields) claim(members, field_qualified_name(cls.qualified_name, f.name), "field");
        const std::string prefix = cls.qualified_name + "#";
        for (const auto& m : cls.methods) {
            claim(members, m.qualified_name, "method");
            if (!m.qualified_name.starts_with(prefix)) {
                throw ModelError(fmt::format("method '{}' is not named under class '{}'", m.qualified_name, cls.qualified_name));
            }
            if (m.loc < 0 || m.max_nesting < 0) {
                throw ModelError(fmt::format("method '{}' has a negative count", m.qualified_name));
            }
        }
    }

    std::size_t total_listed = 0;
    for (const auto& file : model.files) {
        total_listed += file.classes.size();
        for (const auto& c : file.classes) {
            if (!members.contains(c)) {
                throw ModelError(fmt::format("file '{}' lists unknown class '{}'", file.path, c));
            }
        }
    }
    if (total_listed != model.classes.size()) {
        throw ModelError("class-to-file membership is not a partition of the classes");
    }

    auto resolves = [&](RelationKind kind, const std::string& name, bool is_source) {
        if (kind == RelationKind::Contains) {
            return is_source ? (files.contains(name) || packages.contains(name))
                             : (members.contains(name) || files.contains(name));
        }
        return members.contains(name);
    };

    std::set<std::tuple<RelationKind, std::string_view, std::string_view>> triples;
    for (std::size_t i = 0; i < model.relations.size(); ++i) {
        const auto& rel = model.relations[i];
        if (!resolves(rel.kind, rel.source, true)) {
            throw ModelError(fmt::format("relations[{}]: source '{}' does not resolve", i, rel.source));
        }
        if (!rel.external && !resolves(rel.kind, rel.target, false)) {
            throw ModelError(fmt::format("relations[{}]: target '{}' does not resolve and is not marked external",
                                         i, rel.target));
        }
        if (!triples.emplace(rel.kind, rel.source, rel.target).second) {
            throw ModelError(fmt::format("relations[{}]: duplicate ({}, {}, {})", i, to_string(rel.kind),
                                         rel.source, rel.target));
        }
    }
}

// ---------------------------------------------------------------------------

ModelIndex::ModelIndex(const CodeFactsModel& model) : model_(&model)
{
    for (std::size_t i = 0; i < model.classes.size(); ++i) {
        const auto& cls = model.classes[i];
        classes_.emplace(cls.qualified_name, i);
        for (std::size_t j = 0; j < cls.methods.size(); ++j) methods_.emplace(cls.methods[j].qualified_name, std::pair{i, j});
        for (const auto& f : cls.fields) fields_.emplace(field_qualified_name(cls.qualified_name, f.name), i);
    }
    for (std::size_t i = 0; i < model.files.size(); ++i) files_.emplace(model.files[i].path, i);
    for (std::size_t i = 0; i < model.packages.size(); ++i) packages_.emplace(model.packages[i].name, i);
}

const ClassEntity* ModelIndex::find_class(std::string_view qualified_name) const
{
    auto it = classes_.find(qualified_name);
    return it == classes_.end() ? nullptr : &model_->classes[it->second];
}

const MethodEntity* ModelIndex::find_method(std::string_view qualified_name) const
{
    auto it = methods_.find(qualified_name);
    if (it == methods_.end()) return nullptr;
    return &model_->classes[it->second.first].methods[it->second.second];
}

const FileEntity* ModelIndex::find_file(std::string_view path) const
{
    auto it = files_.find(path);
    return it == files_.end() ? nullptr : &model_->files[it->second];
}

const PackageEntity* ModelIndex::find_package(std::string_view name) const
{
    auto it = packages_.find(name);
    return it == packages_.end() ? nullptr : &model_->packages[it->second];
}

std::optional<EntityKind> ModelIndex::kind_of(std::string_view qualified_name) const
{
    if (classes_.contains(qualified_name)) return EntityKind::Class;
    if (methods_.contains(qualified_name)) return EntityKind::Method;
    if (fields_.contains(qualified_name)) return EntityKind::Field;
    if (files_.contains(qualified_name)) return EntityKind::File;
    if (packages_.contains(qualified_name)) return EntityKind::Package;
    return std::nullopt;
}

std::optional<std::string> ModelIndex::owning_class(std::string_view qualified_name) const
{
    if (auto it = classes_.find(qualified_name); it != classes_.end()) return it->first;
    if (auto it = methods_.find(qualified_name); it != methods_.end()) {
        return model_->classes[it->second.first].qualified_name;
    }
    if (auto it = fields_.find(qualified_name); it != fields_.end()) return model_->classes[it->second].qualified_name;
    return std::nullopt;
}

std::vector<const ClassEntity*> ModelIndex::superclass_chain(const ClassEntity& cls) const
{
    std::vector<const ClassEntity*> chain;
    std::set<std::string_view> seen{cls.qualified_name};
    const ClassEntity* current = &cls;
    while (current->superclass) {
        const ClassEntity* parent = find_class(*current->superclass);
        if (parent == nullptr || !seen.insert(parent->qualified_name).second) break;
        chain.push_back(parent);
        current = parent;
    }
    return chain;
}

bool ModelIndex::is_ancestor(std::string_view ancestor, std::string_view cls) const
{
    const ClassEntity* start = find_class(cls);
    if (start == nullptr) return false;
    // Breadth-first over superclass and interfaces.
    std::vector<const ClassEntity*> frontier{start};
    std::set<std::string_view> seen{start->qualified_name};
    while (!frontier.empty()) {
        const ClassEntity* c = frontier.back();
        frontier.pop_back();
        auto visit = [&](const std::string& name) {
            if (name == ancestor) return true;
            if (const ClassEntity* p = find_class(name); p != nullptr && seen.insert(p->qualified_name).second) {
                frontier.push_back(p);
            }
            return false;
        };
        if (c->superclass && visit(*c->superclass)) return true;
        for (const auto& i : c->interfaces) {
            if (visit(i)) return true;
        }
    }
    return false;
}

ClassGraph build_class_graph(const ModelIndex& index)
{
    ClassGraph graph;
    for (const auto& cls : index.model().classes) {
        graph.nodes.push_back(cls.qualified_name);
        graph.out[cls.qualified_name];
        graph.in[cls.qualified_name];
        graph.out_non_inheritance[cls.qualified_name];
    }
    for (const auto& rel : index.model().relations) {
        if (rel.kind == RelationKind::Contains || rel.external) continue;
        auto from = index.owning_class(rel.source);
        auto to = index.owning_class(rel.target);
        if (!from || !to || *from == *to) continue;
        graph.out[*from].insert(*to);
        graph.in[*to].insert(*from);
        if (rel.kind != RelationKind::Inherits) graph.out_non_inheritance[*from].insert(*to);
    }
    return graph;
}

PackageGraph build_package_graph(const ModelIndex& index, const ClassGraph& classes)
{
    PackageGraph graph;
    for (const auto& pkg : index.model().packages) {
        graph.nodes.push_back(pkg.name);
        graph.out[pkg.name];
        graph.in[pkg.name];
    }
    for (const auto& [from, targets] : classes.out) {
        const std::string& from_pkg = index.find_class(from)->package;
        for (const auto& to : targets) {
            const std::string& to_pkg = index.find_class(to)->package;
            if (from_pkg == to_pkg) continue;
            graph.out[from_pkg].insert(to_pkg);
            graph.in[to_pkg].insert(from_pkg);
        }
    }
    return graph;
}

} // namespace smellvuln
