#include "smellvuln/facts_io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "smellvuln/error.hpp"
#include "text_io.hpp"

namespace smellvuln {

namespace {

using ojson = nlohmann::ordered_json;
using nlohmann::json;

ojson to_json(const AttributeAccess& a)
{
    return ojson{{"owner", a.owner}, {"attribute", a.attribute}, {"via_accessor", a.via_accessor}};
}

ojson to_json(const MethodEntity& m)
{
    ojson params = ojson::array();
    for (const auto& p : m.parameters) params.push_back(ojson{{"name", p.name}, {"type_text", p.type_text}});
    ojson decisions = ojson::array();
    for (auto d : m.decision_points) decisions.push_back(std::string(to_string(d)));
    ojson inherited = ojson::array();
    for (const auto& a : m.inherited_accesses) inherited.push_back(to_json(a));
    ojson foreign = ojson::array();
    for (const auto& a : m.foreign_accesses) foreign.push_back(to_json(a));

    return ojson{
        {"qualified_name", m.qualified_name},
        {"name", m.name},
        {"parameters", params},
        {"return_type", m.return_type},
        {"visibility", std::string(to_string(m.visibility))},
        {"is_static", m.is_static},
        {"is_abstract", m.is_abstract},
        {"is_constructor", m.is_constructor},
        {"loc", m.loc},
        {"max_nesting", m.max_nesting},
        {"decision_points", decisions},
        {"local_accesses", m.local_accesses},
        {"inherited_accesses", inherited},
        {"foreign_accesses", foreign},
        {"calls", m.calls},
        {"accessed_variables", m.accessed_variables},
    };
}

ojson to_json(const ClassEntity& c)
{
    ojson fields = ojson::array();
    for (const auto& f : c.fields) {
        fields.push_back(ojson{{"name", f.name},
                               {"type_text", f.type_text},
                               {"visibility", std::string(to_string(f.visibility))},
                               {"is_static", f.is_static}});
    }
    ojson methods = ojson::array();
    for (const auto& m : c.methods) methods.push_back(to_json(m));
    return ojson{
        {"qualified_name", c.qualified_name},
        {"kind", std::string(to_string(c.kind))},
        {"package", c.package},
        {"file", c.file},
        {"superclass", c.superclass ? ojson(*c.superclass) : ojson(nullptr)},
        {"interfaces", c.interfaces},
        {"is_abstract", c.is_abstract},
        {"loc", c.loc},
        {"fields", fields},
        {"methods", methods},
    };
}

/// Reader that tracks the JSON path of the record being decoded so errors
/// can name it.
class Reader {
public:
    explicit Reader(std::string path) : path_(std::move(path)) {}

    [[noreturn]] void fail(const std::string& field, const std::string& what) const
    {
        throw ModelError(fmt::format("facts: {}{}{}: {}", path_, path_.empty() ? "" : ".", field, what));
    }

    const json& get(const json& obj, const std::string& key) const
    {
        if (!obj.is_object()) fail(key, "enclosing record is not an object");
        auto it = obj.find(key);
        if (it == obj.end()) fail(key, "missing field");
        return *it;
    }

    std::string str(const json& obj, const std::string& key) const
    {
        const json& v = get(obj, key);
        if (!v.is_string()) fail(key, "expected a string");
        return v.get<std::string>();
    }

    bool boolean(const json& obj, const std::string& key) const
    {
        const json& v = get(obj, key);
        if (!v.is_boolean()) fail(key, "expected a boolean");
        return v.get<bool>();
    }

    std::int64_t count(const json& obj, const std::string& key) const
    {
        const json& v = get(obj, key);
        if (!v.is_number_integer()) fail(key, "expected an integer");
        const auto n = v.get<std::int64_t>();
        if (n < 0) fail(key, "must be non-negative");
        return n;
    }

    const json& array(const json& obj, const std::string& key) const
    {
        const json& v = get(obj, key);
        if (!v.is_array()) fail(key, "expected an array");
        return v;
    }

    std::vector<std::string> strings(const json& obj, const std::string& key) const
    {
        std::vector<std::string> out;
        const json& arr = array(obj, key);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_string()) fail(fmt::format("{}[{}]", key, i), "expected a string");
            out.push_back(arr[i].get<std::string>());
        }
        return out;
    }

    template <typename Enum, typename Parse>
    Enum enumeration(const json& obj, const std::string& key, Parse parse) const
    {
        const std::string text = str(obj, key);
        auto v = parse(text);
        if (!v) fail(key, fmt::format("unknown value '{}'", text));
        return *v;
    }

    Reader child(const std::string& key, std::size_t i) const
    {
        return Reader(fmt::format("{}{}{}[{}]", path_, path_.empty() ? "" : ".", key, i));
    }

private:
    std::string path_;
};

std::vector<AttributeAccess> read_accesses(const Reader& r, const json& obj, const std::string& key)
{
    std::vector<AttributeAccess> out;
    const json& arr = r.array(obj, key);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        Reader a = r.child(key, i);
        out.push_back(AttributeAccess{a.str(arr[i], "owner"), a.str(arr[i], "attribute"),
                                      a.boolean(arr[i], "via_accessor")});
    }
    return out;
}

MethodEntity read_method(const Reader& r, const json& obj)
{
    MethodEntity m;
    m.qualified_name = r.str(obj, "qualified_name");
    m.name = r.str(obj, "name");
    const json& params = r.array(obj, "parameters");
    for (std::size_t i = 0; i < params.size(); ++i) {
        Reader p = r.child("parameters", i);
        m.parameters.push_back(Parameter{p.str(params[i], "name"), p.str(params[i], "type_text")});
    }
    m.return_type = r.str(obj, "return_type");
    m.visibility = r.enumeration<Visibility>(obj, "visibility", parse_visibility);
    m.is_static = r.boolean(obj, "is_static");
    m.is_abstract = r.boolean(obj, "is_abstract");
    m.is_constructor = r.boolean(obj, "is_constructor");
    m.loc = r.count(obj, "loc");
    m.max_nesting = r.count(obj, "max_nesting");
    const auto decisions = r.strings(obj, "decision_points");
    for (std::size_t i = 0; i < decisions.size(); ++i) {
        auto d = parse_decision_kind(decisions[i]);
        if (!d) r.fail(fmt::format("decision_points[{}]", i), fmt::format("unknown value '{}'", decisions[i]));
        m.decision_points.push_back(*d);
    }
    m.local_accesses = r.strings(obj, "local_accesses");
    m.inherited_accesses = read_accesses(r, obj, "inherited_accesses");
    m.foreign_accesses = read_accesses(r, obj, "foreign_accesses");
    m.calls = r.strings(obj, "calls");
    m.accessed_variables = r.strings(obj, "accessed_variables");
    return m;
}

ClassEntity read_class(const Reader& r, const json& obj)
{
    ClassEntity c;
    c.qualified_name = r.str(obj, "qualified_name");
    c.kind = r.enumeration<ClassKind>(obj, "kind", parse_class_kind);
    c.package = r.str(obj, "package");
    c.file = r.str(obj, "file");
    const json& super = r.get(obj, "superclass");
    if (super.is_string()) c.superclass = super.get<std::string>();
    else if (!super.is_null()) r.fail("superclass", "expected a string or null");
    c.interfaces = r.strings(obj, "interfaces");
    c.is_abstract = r.boolean(obj, "is_abstract");
    c.loc = r.count(obj, "loc");
    const json& fields = r.array(obj, "fields");
    for (std::size_t i = 0; i < fields.size(); ++i) {
        Reader f = r.child("fields", i);
        c.fields.push_back(FieldEntity{f.str(fields[i], "name"), f.str(fields[i], "type_text"),
                                       f.enumeration<Visibility>(fields[i], "visibility", parse_visibility),
                                       f.boolean(fields[i], "is_static")});
    }
    const json& methods = r.array(obj, "methods");
    for (std::size_t i = 0; i < methods.size(); ++i) c.methods.push_back(read_method(r.child("methods", i), methods[i]));
    return c;
}

} // namespace

std::string facts_to_json(const CodeFactsModel& model)
{
    ojson packages = ojson::array();
    for (const auto& p : model.packages) {
        packages.push_back(ojson{{"name", p.name}, {"files", p.files}, {"classes", p.classes}});
    }
    ojson files = ojson::array();
    for (const auto& f : model.files) {
        files.push_back(ojson{{"path", f.path}, {"package", f.package}, {"classes", f.classes}, {"loc", f.loc}});
    }
    ojson classes = ojson::array();
    for (const auto& c : model.classes) classes.push_back(to_json(c));
    ojson relations = ojson::array();
    for (const auto& r : model.relations) {
        relations.push_back(ojson{{"kind", std::string(to_string(r.kind))},
                                  {"source", r.source},
                                  {"target", r.target},
                                  {"external", r.external}});
    }
    ojson skipped = ojson::array();
    for (const auto& s : model.skipped) skipped.push_back(ojson{{"path", s.path}, {"message", s.message}});

    ojson doc{
        {"facts_schema", kFactsSchema},
        {"system", model.system},
        {"version", model.version},
        {"packages", packages},
        {"files", files},
        {"classes", classes},
        {"relations", relations},
        {"skipped", skipped},
    };
    return doc.dump(1, '\t') + "\n";
}

CodeFactsModel facts_from_json(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ModelError(fmt::format("facts: malformed JSON: {}", e.what()));
    }
    const Reader root("");
    if (!doc.is_object()) throw ModelError("facts: top level is not an object");
    const json& schema = root.get(doc, "facts_schema");
    if (!schema.is_number_integer() || schema.get<std::int64_t>() != kFactsSchema) {
        root.fail("facts_schema", fmt::format("unsupported schema version (expected {})", kFactsSchema));
    }

    CodeFactsModel model;
    model.system = root.str(doc, "system");
    model.version = root.str(doc, "version");

    const json& packages = root.array(doc, "packages");
    for (std::size_t i = 0; i < packages.size(); ++i) {
        Reader r = root.child("packages", i);
        model.packages.push_back(
            PackageEntity{r.str(packages[i], "name"), r.strings(packages[i], "files"), r.strings(packages[i], "classes")});
    }
    const json& files = root.array(doc, "files");
    for (std::size_t i = 0; i < files.size(); ++i) {
        Reader r = root.child("files", i);
        model.files.push_back(FileEntity{r.str(files[i], "path"), r.str(files[i], "package"),
                                         r.strings(files[i], "classes"), r.count(files[i], "loc")});
    }
    const json& classes = root.array(doc, "classes");
    for (std::size_t i = 0; i < classes.size(); ++i) model.classes.push_back(read_class(root.child("classes", i), classes[i]));
    const json& relations = root.array(doc, "relations");
    for (std::size_t i = 0; i < relations.size(); ++i) {
        Reader r = root.child("relations", i);
        model.relations.push_back(Relation{r.enumeration<RelationKind>(relations[i], "kind", parse_relation_kind),
                                           r.str(relations[i], "source"), r.str(relations[i], "target"),
                                           r.boolean(relations[i], "external")});
    }
    if (doc.contains("skipped")) {
        const json& skipped = root.array(doc, "skipped");
        for (std::size_t i = 0; i < skipped.size(); ++i) {
            Reader r = root.child("skipped", i);
            model.skipped.push_back(SkippedFile{r.str(skipped[i], "path"), r.str(skipped[i], "message")});
        }
    }

    try {
        validate(model);
    } catch (const ModelError& e) {
        throw ModelError(fmt::format("facts: {}", e.what()));
    }
    canonicalize(model);
    return model;
}

void write_facts(const CodeFactsModel& model, const std::filesystem::path& path)
{
    write_text_file(path, facts_to_json(model));
}

CodeFactsModel read_facts(const std::filesystem::path& path)
{
    return facts_from_json(read_text_file(path));
}

} // namespace smellvuln
