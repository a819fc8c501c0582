#include "smellvuln/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "java_syntax.hpp"
#include "smellvuln/error.hpp"

namespace smellvuln {

namespace {

using java::RawBody;
using java::RawChain;
using java::RawClass;
using java::RawField;
using java::RawFile;
using java::RawMethod;

struct TypeRef {
    std::string name;
    bool in_model = false;
    bool qualified = false; ///< external name known to be fully qualified (imported)
    int dims = 0;
};

struct ClassInfo;

struct MethodInfo {
    const RawMethod* raw = nullptr;
    std::string qualified_name;
    ClassInfo* owner = nullptr;
};

struct ClassInfo {
    const RawClass* raw = nullptr;
    const RawFile* file = nullptr;
    std::string qualified_name;
    std::string package;
    ClassInfo* enclosing = nullptr;
    std::map<std::string, ClassInfo*> nested;
    std::optional<TypeRef> superclass;
    std::vector<TypeRef> interfaces;
    std::map<std::string, const RawField*> fields;
    std::deque<MethodInfo> methods;
};

/// Accumulates the resolved facts of one body (a method, or the class-level
/// initializers).
struct BodyFacts {
    std::set<std::string> local_accesses;
    std::set<AttributeAccess> inherited_accesses;
    std::set<AttributeAccess> foreign_accesses;
    std::set<std::string> calls;
    std::set<std::string> accessed_fields; ///< field qualified names touched directly
    std::set<std::string> variables;
    std::set<std::string> type_deps;     ///< in-model classes
    std::set<std::string> external_deps; ///< imported library types
};

class Resolver {
public:
    Resolver(const std::vector<RawFile>& files, CodeFactsModel& model) : files_(files), model_(model) {}

    void run()
    {
        for (const auto& file : files_) {
            for (const auto& cls : file.classes) register_class(file, cls, nullptr);
        }
        for (auto& [name, info] : classes_) resolve_supertypes(info);
        for (auto& [name, info] : classes_) collect_members(info);

        for (auto& [name, info] : classes_) model_.classes.push_back(build_class(info));
        build_files_and_packages();

        relations_.erase(std::unique(relations_.begin(), relations_.end()), relations_.end());
        model_.relations = std::move(relations_);
    }

private:
    const std::vector<RawFile>& files_;
    CodeFactsModel& model_;
    std::map<std::string, ClassInfo> classes_;
    std::map<std::string, std::vector<ClassInfo*>> by_file_;
    std::vector<Relation> relations_;

    // -- registration --------------------------------------------------------

    void register_class(const RawFile& file, const RawClass& raw, ClassInfo* enclosing)
    {
        std::string qn;
        if (enclosing != nullptr) qn = enclosing->qualified_name + "." + raw.name;
        else if (file.package.empty()) qn = raw.name;
        else qn = file.package + "." + raw.name;

        auto [it, inserted] = classes_.try_emplace(qn);
        if (!inserted) {
            throw ModelError(fmt::format("duplicate qualified name '{}' (declared in '{}' and '{}')", qn,
                                         it->second.file->path, file.path));
        }
        ClassInfo& info = it->second;
        info.raw = &raw;
        info.file = &file;
        info.qualified_name = qn;
        info.package = file.package.empty() ? std::string(kDefaultPackage) : file.package;
        info.enclosing = enclosing;
        if (enclosing != nullptr) enclosing->nested[raw.name] = &info;
        by_file_[file.path].push_back(&info);
        for (const auto& n : raw.nested) register_class(file, n, &info);
    }

    ClassInfo* find_info(const std::string& qn)
    {
        auto it = classes_.find(qn);
        return it == classes_.end() ? nullptr : &it->second;
    }

    // -- type resolution -----------------------------------------------------

    bool is_type_param(const std::string& name, const ClassInfo* ctx, const std::set<std::string>* method_params) const
    {
        if (method_params != nullptr && method_params->contains(name)) return true;
        for (const ClassInfo* c = ctx; c != nullptr; c = c->enclosing) {
            if (c->raw->type_params.contains(name)) return true;
        }
        return false;
    }

    std::optional<TypeRef> lookup_simple(const std::string& simple, ClassInfo* ctx)
    {
        for (ClassInfo* c = ctx; c != nullptr; c = c->enclosing) {
            if (c->raw->name == simple) return TypeRef{c->qualified_name, true};
            if (auto it = c->nested.find(simple); it != c->nested.end()) return TypeRef{it->second->qualified_name, true};
            for (ClassInfo* s : superclass_chain(c)) {
                if (auto it = s->nested.find(simple); it != s->nested.end()) {
                    return TypeRef{it->second->qualified_name, true};
                }
            }
        }
        const RawFile& file = *ctx->file;
        for (ClassInfo* top : by_file_[file.path]) {
            if (top->enclosing == nullptr && top->raw->name == simple) return TypeRef{top->qualified_name, true};
        }
        for (const auto& imp : file.imports) {
            if (imp == simple || imp.ends_with("." + simple)) {
                if (classes_.contains(imp)) return TypeRef{imp, true};
                return TypeRef{imp, false, true};
            }
        }
        const std::string same_pkg = file.package.empty() ? simple : file.package + "." + simple;
        if (classes_.contains(same_pkg)) return TypeRef{same_pkg, true};
        for (const auto& w : file.wildcard_imports) {
            const std::string candidate = w + "." + simple;
            if (classes_.contains(candidate)) return TypeRef{candidate, true};
        }
        return TypeRef{simple, false, false};
    }

    std::optional<TypeRef> resolve_type(const std::string& text, ClassInfo* ctx,
                                        const std::set<std::string>* method_params = nullptr)
    {
        auto [base, dims] = java::erase_type(text);
        if (base.empty() || base == "var" || java::is_primitive(base)) return std::nullopt;
        if (is_type_param(base, ctx, method_params)) return std::nullopt;

        std::optional<TypeRef> ref;
        if (auto dot = base.find('.'); dot != std::string::npos) {
            if (classes_.contains(base)) {
                ref = TypeRef{base, true};
            } else {
                auto head = lookup_simple(base.substr(0, dot), ctx);
                const std::string candidate = head && head->in_model ? head->name + base.substr(dot) : "";
                if (!candidate.empty() && classes_.contains(candidate)) ref = TypeRef{candidate, true};
                else ref = TypeRef{base, false, true};
            }
        } else {
            ref = lookup_simple(base, ctx);
        }
        if (ref) ref->dims = dims;
        return ref;
    }

    // -- hierarchy -----------------------------------------------------------

    void resolve_supertypes(ClassInfo& info)
    {
        const RawClass& raw = *info.raw;
        std::vector<std::string> supers = raw.implements;
        if (raw.kind == ClassKind::Interface) {
            supers.insert(supers.begin(), raw.extends.begin(), raw.extends.end());
        } else if (!raw.extends.empty()) {
            // Resolve in the enclosing context so that `class A extends A.B` is not self-referential.
            info.superclass = resolve_type(raw.extends.front(), info.enclosing ? info.enclosing : &info);
            if (info.superclass && info.superclass->in_model && info.superclass->name == info.qualified_name) {
                info.superclass.reset();
            }
        }
        for (const auto& s : supers) {
            if (auto ref = resolve_type(s, &info)) info.interfaces.push_back(*ref);
        }
    }

    std::vector<ClassInfo*> superclass_chain(ClassInfo* c)
    {
        std::vector<ClassInfo*> chain;
        std::set<ClassInfo*> seen{c};
        while (c->superclass && c->superclass->in_model) {
            ClassInfo* parent = find_info(c->superclass->name);
            if (parent == nullptr || !seen.insert(parent).second) break;
            chain.push_back(parent);
            c = parent;
        }
        return chain;
    }

    /// The class itself, then superclasses, then interfaces (breadth-first).
    std::vector<ClassInfo*> lookup_order(ClassInfo* c)
    {
        std::vector<ClassInfo*> order{c};
        for (ClassInfo* s : superclass_chain(c)) order.push_back(s);
        std::set<ClassInfo*> seen(order.begin(), order.end());
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (const auto& iface : order[i]->interfaces) {
                if (!iface.in_model) continue;
                ClassInfo* p = find_info(iface.name);
                if (p != nullptr && seen.insert(p).second) order.push_back(p);
            }
        }
        return order;
    }

    bool is_ancestor(ClassInfo* ancestor, ClassInfo* c)
    {
        if (ancestor == c) return false;
        auto order = lookup_order(c);
        return std::find(order.begin(), order.end(), ancestor) != order.end();
    }

    // -- members -------------------------------------------------------------

    void collect_members(ClassInfo& info)
    {
        for (const auto& f : info.raw->fields) info.fields[f.name] = &f;
        std::map<std::pair<std::string, std::size_t>, int> seen;
        for (const auto& m : info.raw->methods) {
            const int ordinal = ++seen[{m.name, m.params.size()}];
            std::string qn = method_qualified_name(info.qualified_name, m.name, m.params.size());
            if (ordinal > 1) qn += fmt::format("~{}", ordinal);
            info.methods.push_back(MethodInfo{&m, std::move(qn), &info});
        }
    }

    std::pair<ClassInfo*, const RawField*> find_field(ClassInfo* c, const std::string& name)
    {
        for (ClassInfo* k : lookup_order(c)) {
            if (auto it = k->fields.find(name); it != k->fields.end()) return {k, it->second};
        }
        return {nullptr, nullptr};
    }

    MethodInfo* find_method(ClassInfo* c, const std::string& name, std::size_t argc)
    {
        auto order = lookup_order(c);
        for (ClassInfo* k : order) {
            for (auto& m : k->methods) {
                if (!m.raw->is_constructor && m.raw->name == name && m.raw->params.size() == argc) return &m;
            }
        }
        for (ClassInfo* k : order) {
            for (auto& m : k->methods) {
                if (!m.raw->is_constructor && m.raw->name == name && m.raw->varargs &&
                    argc + 1 >= m.raw->params.size()) {
                    return &m;
                }
            }
        }
        return nullptr;
    }

    MethodInfo* find_constructor(ClassInfo* c, std::size_t argc)
    {
        for (auto& m : c->methods) {
            if (m.raw->is_constructor && m.raw->params.size() == argc) return &m;
        }
        return nullptr;
    }

    // -- bodies --------------------------------------------------------------

    struct Scope {
        ClassInfo* cls;
        const std::set<std::string>* method_type_params;
        std::map<std::string, std::string> locals;
    };

    void note_type(BodyFacts& facts, const Scope& scope, const std::optional<TypeRef>& ref)
    {
        if (!ref) return;
        if (ref->in_model) {
            if (ref->name != scope.cls->qualified_name) facts.type_deps.insert(ref->name);
        } else if (ref->qualified) {
            facts.external_deps.insert(ref->name);
        }
    }

    void record_access(BodyFacts& facts, const Scope& scope, ClassInfo* owner, const std::string& attribute)
    {
        const std::string fqn = field_qualified_name(owner->qualified_name, attribute);
        facts.accessed_fields.insert(fqn);
        facts.variables.insert(fqn);
        if (owner == scope.cls) {
            facts.local_accesses.insert(attribute);
        } else if (is_ancestor(owner, scope.cls)) {
            facts.inherited_accesses.insert({owner->qualified_name, attribute, false});
        } else {
            facts.foreign_accesses.insert({owner->qualified_name, attribute, false});
        }
    }

    void record_accessor_call(BodyFacts& facts, const Scope& scope, ClassInfo* owner, const std::string& method)
    {
        if (owner == scope.cls || is_ancestor(owner, scope.cls)) return;
        const std::string attribute = accessor_attribute(method);
        facts.variables.insert(field_qualified_name(owner->qualified_name, attribute));
        facts.foreign_accesses.insert({owner->qualified_name, attribute, true});
    }

    std::optional<TypeRef> method_result(MethodInfo* m)
    {
        if (m->raw->is_constructor) return TypeRef{m->owner->qualified_name, true};
        return resolve_type(m->raw->return_type, m->owner, &m->raw->type_params);
    }

    void resolve_chain(BodyFacts& facts, Scope& scope, const RawChain& chain)
    {
        using Root = RawChain::Root;
        using Kind = RawChain::Segment::Kind;
        const auto& segs = chain.segments;
        std::optional<TypeRef> cur;
        std::size_t i = 0;

        switch (chain.root) {
        case Root::This:
        case Root::Super: {
            ClassInfo* base = scope.cls;
            if (chain.root == Root::Super) {
                cur = scope.cls->superclass;
                base = cur && cur->in_model ? find_info(cur->name) : nullptr;
            } else {
                cur = TypeRef{scope.cls->qualified_name, true};
            }
            if (!segs.empty() && segs[0].kind == Kind::Call && segs[0].name == "<init>") {
                if (base != nullptr) {
                    if (MethodInfo* ctor = find_constructor(base, segs[0].argc)) facts.calls.insert(ctor->qualified_name);
                }
                return;
            }
            break;
        }
        case Root::Implicit: {
            const auto& seg = segs[0];
            MethodInfo* m = nullptr;
            for (ClassInfo* c = scope.cls; c != nullptr && m == nullptr; c = c->enclosing) {
                m = find_method(c, seg.name, seg.argc);
            }
            if (m == nullptr) return;
            facts.calls.insert(m->qualified_name);
            cur = method_result(m);
            i = 1;
            break;
        }
        case Root::Name: {
            const std::string& name = chain.name;
            if (auto it = scope.locals.find(name); it != scope.locals.end()) {
                facts.variables.insert(name);
                cur = it->second.empty() ? std::nullopt
                                         : resolve_type(it->second, scope.cls, scope.method_type_params);
                break;
            }
            ClassInfo* owner = nullptr;
            const RawField* field = nullptr;
            for (ClassInfo* c = scope.cls; c != nullptr && owner == nullptr; c = c->enclosing) {
                std::tie(owner, field) = find_field(c, name);
            }
            if (owner != nullptr) {
                record_access(facts, scope, owner, name);
                cur = resolve_type(field->type_text, owner);
                break;
            }
            if (!name.empty() && std::isupper(static_cast<unsigned char>(name[0]))) {
                auto ref = resolve_type(name, scope.cls, scope.method_type_params);
                if (ref && (ref->in_model || ref->qualified)) {
                    note_type(facts, scope, ref);
                    cur = ref;
                    break;
                }
            }
            // Package-qualified name such as org.example.Util.helper().
            std::string candidate = name;
            for (std::size_t k = 0; k < segs.size() && segs[k].kind == Kind::Field; ++k) {
                candidate += "." + segs[k].name;
                if (classes_.contains(candidate)) {
                    cur = TypeRef{candidate, true};
                    note_type(facts, scope, cur);
                    i = k + 1;
                    break;
                }
            }
            if (!cur) return;
            break;
        }
        case Root::New: {
            cur = resolve_type(chain.name, scope.cls, scope.method_type_params);
            note_type(facts, scope, cur);
            if (cur && cur->in_model) {
                if (MethodInfo* ctor = find_constructor(find_info(cur->name), chain.new_argc)) {
                    facts.calls.insert(ctor->qualified_name);
                }
            }
            break;
        }
        case Root::Unknown:
            return;
        }

        for (; i < segs.size(); ++i) {
            if (!cur) return;
            const auto& seg = segs[i];
            if (seg.kind == Kind::Index) {
                if (cur->dims > 0) --cur->dims;
                else cur.reset();
                continue;
            }
            if (cur->dims > 0 || !cur->in_model) return; // arrays and library types
            if (seg.kind == Kind::Field && seg.name == "class") return;
            ClassInfo* target = find_info(cur->name);
            if (target == nullptr) return;

            if (seg.kind == Kind::Field) {
                auto [owner, field] = find_field(target, seg.name);
                if (owner != nullptr) {
                    record_access(facts, scope, owner, seg.name);
                    cur = resolve_type(field->type_text, owner);
                } else if (auto it = target->nested.find(seg.name); it != target->nested.end()) {
                    cur = TypeRef{it->second->qualified_name, true};
                    note_type(facts, scope, cur);
                } else {
                    cur.reset();
                }
                continue;
            }

            MethodInfo* m = find_method(target, seg.name, seg.argc);
            if (m != nullptr) facts.calls.insert(m->qualified_name);
            if (is_accessor_name(seg.name, seg.argc)) {
                record_accessor_call(facts, scope, m != nullptr ? m->owner : target, seg.name);
            }
            cur = m != nullptr ? method_result(m) : std::nullopt;
        }
    }

    BodyFacts resolve_body(ClassInfo* cls, const RawBody& body, const std::vector<java::RawParam>& params,
                           const std::set<std::string>* method_type_params)
    {
        BodyFacts facts;
        Scope scope{cls, method_type_params, {}};
        for (const auto& p : params) {
            scope.locals[p.name] = p.type_text;
            facts.variables.insert(p.name);
        }
        for (const auto& [name, type] : body.locals) {
            auto [it, inserted] = scope.locals.emplace(name, type);
            if (!inserted && it->second.empty()) it->second = type;
            facts.variables.insert(name);
        }
        for (const auto& t : body.type_uses) note_type(facts, scope, resolve_type(t, cls, method_type_params));
        for (const auto& chain : body.chains) resolve_chain(facts, scope, chain);
        return facts;
    }

    // -- model assembly ------------------------------------------------------

    void add_relation(RelationKind kind, std::string source, std::string target, bool external = false)
    {
        relations_.push_back(Relation{kind, std::move(source), std::move(target), external});
    }

    void add_type_relations(const std::string& cls, const BodyFacts& facts)
    {
        for (const auto& t : facts.type_deps) add_relation(RelationKind::DependsOn, cls, t);
        for (const auto& t : facts.external_deps) add_relation(RelationKind::DependsOn, cls, t, true);
    }

    ClassEntity build_class(ClassInfo& info)
    {
        const RawClass& raw = *info.raw;
        const auto& code_line = info.file->code_line;

        ClassEntity cls;
        cls.qualified_name = info.qualified_name;
        cls.kind = raw.kind;
        cls.package = info.package;
        cls.file = info.file->path;
        cls.is_abstract = raw.is_abstract;
        cls.loc = java::count_code_lines(code_line, raw.first_line, raw.last_line);
        if (info.superclass) {
            cls.superclass = info.superclass->name;
            add_relation(RelationKind::Inherits, cls.qualified_name, info.superclass->name, !info.superclass->in_model);
        }
        for (const auto& iface : info.interfaces) {
            cls.interfaces.push_back(iface.name);
            add_relation(RelationKind::Inherits, cls.qualified_name, iface.name, !iface.in_model);
        }

        BodyFacts signature_facts;
        Scope class_scope{&info, nullptr, {}};
        for (const auto& f : raw.fields) {
            cls.fields.push_back(FieldEntity{f.name, f.type_text, f.visibility, f.is_static});
            note_type(signature_facts, class_scope, resolve_type(f.type_text, &info));
        }

        for (auto& mi : info.methods) {
            const RawMethod& rm = *mi.raw;
            MethodEntity m;
            m.qualified_name = mi.qualified_name;
            m.name = rm.name;
            for (const auto& p : rm.params) m.parameters.push_back(Parameter{p.name, p.type_text});
            m.return_type = rm.return_type;
            m.visibility = rm.visibility;
            m.is_static = rm.is_static;
            m.is_abstract = rm.is_abstract;
            m.is_constructor = rm.is_constructor;
            m.loc = java::count_code_lines(code_line, rm.first_line, rm.last_line);
            m.decision_points = rm.body.decisions;
            m.max_nesting = rm.body.max_nesting;

            Scope sig_scope{&info, &rm.type_params, {}};
            note_type(signature_facts, sig_scope, resolve_type(rm.return_type, &info, &rm.type_params));
            for (const auto& p : rm.params) note_type(signature_facts, sig_scope, resolve_type(p.type_text, &info, &rm.type_params));
            for (const auto& t : rm.throws) note_type(signature_facts, sig_scope, resolve_type(t, &info, &rm.type_params));

            BodyFacts facts = resolve_body(&info, rm.body, rm.params, &rm.type_params);
            m.local_accesses.assign(facts.local_accesses.begin(), facts.local_accesses.end());
            m.inherited_accesses.assign(facts.inherited_accesses.begin(), facts.inherited_accesses.end());
            m.foreign_accesses.assign(facts.foreign_accesses.begin(), facts.foreign_accesses.end());
            m.calls.assign(facts.calls.begin(), facts.calls.end());
            m.accessed_variables.assign(facts.variables.begin(), facts.variables.end());

            for (const auto& target : facts.calls) add_relation(RelationKind::Calls, m.qualified_name, target);
            for (const auto& f : facts.accessed_fields) add_relation(RelationKind::AccessesField, m.qualified_name, f);
            add_type_relations(cls.qualified_name, facts);
            cls.methods.push_back(std::move(m));
        }

        // Field initializers and initializer blocks belong to no method; what
        // they touch becomes a class-level dependency.
        BodyFacts init = resolve_body(&info, raw.init_body, {}, nullptr);
        for (const auto& target : init.calls) {
            const auto owner = target.substr(0, target.find('#'));
            if (owner != cls.qualified_name) init.type_deps.insert(owner);
        }
        for (const auto& a : init.foreign_accesses) init.type_deps.insert(a.owner);
        for (const auto& a : init.inherited_accesses) init.type_deps.insert(a.owner);
        add_type_relations(cls.qualified_name, init);
        add_type_relations(cls.qualified_name, signature_facts);
        return cls;
    }

    void build_files_and_packages()
    {
        std::map<std::string, PackageEntity> packages;
        for (const auto& raw : files_) {
            FileEntity file;
            file.path = raw.path;
            file.package = raw.package.empty() ? std::string(kDefaultPackage) : raw.package;
            file.loc = raw.loc;
            for (ClassInfo* c : by_file_[raw.path]) {
                file.classes.push_back(c->qualified_name);
                add_relation(RelationKind::Contains, file.path, c->qualified_name);
            }
            PackageEntity& pkg = packages[file.package];
            pkg.name = file.package;
            pkg.files.push_back(file.path);
            pkg.classes.insert(pkg.classes.end(), file.classes.begin(), file.classes.end());
            add_relation(RelationKind::Contains, file.package, file.path);
            model_.files.push_back(std::move(file));
        }
        for (auto& [name, pkg] : packages) model_.packages.push_back(std::move(pkg));
    }
};

} // namespace

CodeFactsModel parse_sources(const std::vector<SourceFile>& sources, std::string system, std::string version,
                             const ParseOptions& options)
{
    std::vector<std::optional<RawFile>> parsed(sources.size());
    std::vector<std::string> errors(sources.size());

    auto work = [&](std::size_t i) {
        try {
            parsed[i] = java::parse_compilation_unit(sources[i].path, sources[i].text);
        } catch (const java::SyntaxError& e) {
            errors[i] = e.what();
        }
    };

    unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, sources.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < sources.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < sources.size(); i = next++) work(i);
            });
        }
    }

    CodeFactsModel model;
    model.system = std::move(system);
    model.version = std::move(version);

    std::vector<RawFile> files;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        if (parsed[i]) files.push_back(std::move(*parsed[i]));
        else model.skipped.push_back(SkippedFile{sources[i].path, errors[i]});
    }
    std::sort(files.begin(), files.end(), [](const RawFile& a, const RawFile& b) { return a.path < b.path; });

    Resolver(files, model).run();
    canonicalize(model);
    validate(model);
    return model;
}

CodeFactsModel parse_corpus(const std::filesystem::path& source_root, std::string system, std::string version,
                            const ParseOptions& options)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(source_root, ec)) {
        throw InputError(fmt::format("source root '{}' does not exist or is not a directory", source_root.string()));
    }

    std::vector<fs::path> paths;
    for (fs::recursive_directory_iterator it(source_root, ec), end; it != end; it.increment(ec)) {
        if (ec) break;
        if (it->is_regular_file() && it->path().extension() == ".java") paths.push_back(it->path());
    }
    if (ec) throw InputError(fmt::format("cannot traverse '{}': {}", source_root.string(), ec.message()));

    std::vector<SourceFile> sources;
    sources.reserve(paths.size());
    for (const auto& p : paths) {
        std::ifstream in(p, std::ios::binary);
        if (!in) throw InputError(fmt::format("cannot read '{}'", p.string()));
        std::ostringstream text;
        text << in.rdbuf();
        sources.push_back(SourceFile{fs::relative(p, source_root).generic_string(), text.str()});
    }
    std::sort(sources.begin(), sources.end(), [](const SourceFile& a, const SourceFile& b) { return a.path < b.path; });
    return parse_sources(sources, std::move(system), std::move(version), options);
}

} // namespace smellvuln
