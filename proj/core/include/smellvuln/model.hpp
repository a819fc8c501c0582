#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace smellvuln {

// ---------------------------------------------------------------------------
// Code facts model
//
// Qualified-name scheme:
//   package          org.example
//   class            org.example.Outer.Inner
//   method           org.example.Outer#run(2)       (name + parameter arity)
//   field            org.example.Outer.count
//   file             org/example/Outer.java          (relative to source root)
// Classes in the unnamed package use their bare name and belong to the
// package kDefaultPackage.
// ---------------------------------------------------------------------------

inline constexpr std::string_view kDefaultPackage = "<default>";

enum class ClassKind { Class, Interface, Enum };
enum class Visibility { Public, Protected, Package, Private };
enum class RelationKind { Inherits, Contains, Calls, AccessesField, DependsOn };
enum class DecisionKind { If, For, While, Do, Case, Catch, Ternary, And, Or };

std::string_view to_string(ClassKind kind);
std::string_view to_string(Visibility visibility);
std::string_view to_string(RelationKind kind);
std::string_view to_string(DecisionKind kind);

std::optional<ClassKind> parse_class_kind(std::string_view text);
std::optional<Visibility> parse_visibility(std::string_view text);
std::optional<RelationKind> parse_relation_kind(std::string_view text);
std::optional<DecisionKind> parse_decision_kind(std::string_view text);

struct FieldEntity {
    std::string name;
    std::string type_text;
    Visibility visibility = Visibility::Package;
    bool is_static = false;

    auto operator<=>(const FieldEntity&) const = default;
};

struct Parameter {
    std::string name;
    std::string type_text;

    auto operator<=>(const Parameter&) const = default;
};

/// One attribute read or written by a method. `owner` is the class that
/// declares the attribute; `via_accessor` marks get/set/is calls.
struct AttributeAccess {
    std::string owner;
    std::string attribute;
    bool via_accessor = false;

    auto operator<=>(const AttributeAccess&) const = default;
};

struct MethodEntity {
    std::string qualified_name;
    std::string name;
    std::vector<Parameter> parameters;
    std::string return_type; ///< empty for constructors
    Visibility visibility = Visibility::Package;
    bool is_static = false;
    bool is_abstract = false;
    bool is_constructor = false;
    std::int64_t loc = 0;

    // Body facts. Access and call lists are sorted and free of duplicates;
    // decision points keep source order.
    std::vector<DecisionKind> decision_points;
    std::vector<std::string> local_accesses;          ///< own attributes
    std::vector<AttributeAccess> inherited_accesses;  ///< attributes of in-model ancestors
    std::vector<AttributeAccess> foreign_accesses;    ///< attributes of unrelated in-model classes
    std::vector<std::string> calls;                   ///< in-model target methods
    std::vector<std::string> accessed_variables;      ///< parameters, locals, attributes
    std::int64_t max_nesting = 0;

    auto operator<=>(const MethodEntity&) const = default;
};

struct ClassEntity {
    std::string qualified_name;
    ClassKind kind = ClassKind::Class;
    std::string package;
    std::string file;
    std::optional<std::string> superclass;
    std::vector<std::string> interfaces;
    bool is_abstract = false;
    std::vector<FieldEntity> fields;
    std::vector<MethodEntity> methods;
    std::int64_t loc = 0;

    auto operator<=>(const ClassEntity&) const = default;
};

struct FileEntity {
    std::string path;
    std::string package;
    std::vector<std::string> classes;
    std::int64_t loc = 0;

    auto operator<=>(const FileEntity&) const = default;
};

struct PackageEntity {
    std::string name;
    std::vector<std::string> files;
    std::vector<std::string> classes;

    auto operator<=>(const PackageEntity&) const = default;
};

struct Relation {
    RelationKind kind = RelationKind::DependsOn;
    std::string source;
    std::string target;
    bool external = false; ///< target is an unresolved library reference

    auto operator<=>(const Relation&) const = default;
};

/// A source file the front-end could not parse.
struct SkippedFile {
    std::string path;
    std::string message;

    auto operator<=>(const SkippedFile&) const = default;
};

struct CodeFactsModel {
    std::string system;
    std::string version;
    std::vector<PackageEntity> packages;
    std::vector<FileEntity> files;
    std::vector<ClassEntity> classes;
    std::vector<Relation> relations;
    std::vector<SkippedFile> skipped;

    bool operator==(const CodeFactsModel&) const = default;
};

/// get/set/is-prefixed name taking at most one parameter.
bool is_accessor_name(std::string_view method, std::size_t arity);

/// Attribute an accessor exposes: "getTotalCount" -> "totalCount".
std::string accessor_attribute(std::string_view method);

std::string method_qualified_name(std::string_view class_name, std::string_view method, std::size_t arity);
std::string field_qualified_name(std::string_view class_name, std::string_view field);

/// Sorts every entity list and relation list into canonical order and
/// removes duplicate relations.
void canonicalize(CodeFactsModel& model);

/// Throws ModelError naming the first violated invariant.
void validate(const CodeFactsModel& model);

// ---------------------------------------------------------------------------
// Lookup structure over an immutable model.
// ---------------------------------------------------------------------------

enum class EntityKind { Package, File, Class, Method, Field };

class ModelIndex {
public:
    explicit ModelIndex(const CodeFactsModel& model);

    const CodeFactsModel& model() const { return *model_; }

    const ClassEntity* find_class(std::string_view qualified_name) const;
    const MethodEntity* find_method(std::string_view qualified_name) const;
    const FileEntity* find_file(std::string_view path) const;
    const PackageEntity* find_package(std::string_view name) const;

    std::optional<EntityKind> kind_of(std::string_view qualified_name) const;

    /// Class that declares a method or field, or the class itself.
    /// Empty for packages, files and unknown names.
    std::optional<std::string> owning_class(std::string_view qualified_name) const;

    /// In-model superclass chain, nearest first.
    std::vector<const ClassEntity*> superclass_chain(const ClassEntity& cls) const;

    bool is_ancestor(std::string_view ancestor, std::string_view cls) const;

private:
    const CodeFactsModel* model_;
    std::map<std::string, std::size_t, std::less<>> classes_;
    std::map<std::string, std::pair<std::size_t, std::size_t>, std::less<>> methods_;
    std::map<std::string, std::size_t, std::less<>> fields_;
    std::map<std::string, std::size_t, std::less<>> files_;
    std::map<std::string, std::size_t, std::less<>> packages_;
};

/// Class-level dependency digraph derived from inherits/calls/accesses_field/
/// depends_on relations. External endpoints and self-loops are dropped.
struct ClassGraph {
    std::vector<std::string> nodes; ///< class qualified names, sorted
    std::map<std::string, std::set<std::string>> out;
    std::map<std::string, std::set<std::string>> in;
    /// Same as `out`, restricted to relations other than inherits.
    std::map<std::string, std::set<std::string>> out_non_inheritance;
};

ClassGraph build_class_graph(const ModelIndex& index);

/// Package-level digraph: p -> q whenever some class of p depends on a class of q.
struct PackageGraph {
    std::vector<std::string> nodes;
    std::map<std::string, std::set<std::string>> out;
    std::map<std::string, std::set<std::string>> in;
};

PackageGraph build_package_graph(const ModelIndex& index, const ClassGraph& classes);

} // namespace smellvuln
