#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "smellvuln/corpus.hpp"

namespace testsupport {

using namespace smellvuln;

std::filesystem::path fixture(const std::string& relative) { return std::filesystem::path(SMELLVULN_FIXTURES) / relative; }

CodeFactsModel parse_java(const std::vector<std::pair<std::string, std::string>>& files, unsigned threads)
{
    std::vector<SourceFile> sources;
    for (const auto& [path, text] : files) sources.push_back({path, text});
    return parse_sources(sources, "t", "1", ParseOptions{threads});
}

const ClassEntity& find_class(const CodeFactsModel& model, const std::string& name)
{
    for (const auto& c : model.classes) {
        if (c.qualified_name == name) return c;
    }
    throw std::runtime_error("no class " + name);
}

const MethodEntity& find_method(const CodeFactsModel& model, const std::string& name)
{
    for (const auto& c : model.classes) {
        for (const auto& m : c.methods) {
            if (m.qualified_name == name) return m;
        }
    }
    throw std::runtime_error("no method " + name);
}

CodeFactsModel random_model(std::mt19937_64& rng, int max_classes)
{
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto chance = [&](double p) { return std::bernoulli_distribution(p)(rng); };

    CodeFactsModel m;
    m.system = "rand";
    m.version = fmt::format("v{}", pick(0, 99));
    const int n = pick(0, max_classes);
    const std::vector<std::string> packages{"p0", "p1", "p2"};
    const std::vector<Visibility> vis{Visibility::Public, Visibility::Protected, Visibility::Package, Visibility::Private};

    for (int i = 0; i < n; ++i) {
        ClassEntity c;
        c.package = packages[static_cast<std::size_t>(pick(0, 2))];
        c.qualified_name = fmt::format("{}.C{}", c.package, i);
        c.file = fmt::format("{}/C{}.java", c.package, i);
        c.kind = chance(0.1) ? ClassKind::Interface : ClassKind::Class;
        c.loc = pick(0, 600);
        if (i > 0 && chance(0.4)) c.superclass = m.classes[static_cast<std::size_t>(pick(0, i - 1))].qualified_name;
        else if (chance(0.1)) c.superclass = "java.lang.Thread"; // external
        const int nf = pick(0, 5);
        for (int f = 0; f < nf; ++f) {
            c.fields.push_back({fmt::format("f{}", f), "int", vis[static_cast<std::size_t>(pick(0, 3))], chance(0.2)});
        }
        m.classes.push_back(std::move(c));
    }

    // Methods once every class exists, so accesses and calls can cross classes.
    for (std::size_t i = 0; i < m.classes.size(); ++i) {
        auto& c = m.classes[i];
        const int nm = pick(0, 6);
        for (int k = 0; k < nm; ++k) {
            MethodEntity me;
            const int arity = pick(0, 7);
            const bool accessor = chance(0.2);
            me.name = accessor ? fmt::format("getF{}", k) : fmt::format("m{}", k);
            me.qualified_name = method_qualified_name(c.qualified_name, me.name, static_cast<std::size_t>(arity));
            for (int p = 0; p < arity; ++p) me.parameters.push_back({fmt::format("a{}", p), "int"});
            me.return_type = "int";
            me.visibility = vis[static_cast<std::size_t>(pick(0, 3))];
            me.is_constructor = chance(0.1);
            me.loc = pick(0, 90);
            me.max_nesting = pick(0, 7);
            const int nd = pick(0, 14);
            for (int d = 0; d < nd; ++d) me.decision_points.push_back(static_cast<DecisionKind>(pick(0, 8)));
            for (const auto& f : c.fields) {
                if (chance(0.4)) {
                    me.local_accesses.push_back(f.name);
                    me.accessed_variables.push_back(field_qualified_name(c.qualified_name, f.name));
                }
            }
            for (int p = 0; p < arity; ++p) me.accessed_variables.push_back(fmt::format("a{}", p));
            c.methods.push_back(std::move(me));
        }
    }
    for (std::size_t i = 0; i < m.classes.size(); ++i) {
        auto& c = m.classes[i];
        for (auto& me : c.methods) {
            const int nforeign = pick(0, 8);
            for (int k = 0; k < nforeign && m.classes.size() > 1; ++k) {
                const auto& other = m.classes[static_cast<std::size_t>(pick(0, static_cast<int>(m.classes.size()) - 1))];
                if (other.qualified_name == c.qualified_name || other.fields.empty()) continue;
                const auto& f = other.fields[static_cast<std::size_t>(pick(0, static_cast<int>(other.fields.size()) - 1))];
                me.foreign_accesses.push_back({other.qualified_name, f.name, chance(0.3)});
                me.accessed_variables.push_back(field_qualified_name(other.qualified_name, f.name));
                m.relations.push_back({RelationKind::AccessesField, me.qualified_name,
                                       field_qualified_name(other.qualified_name, f.name), false});
            }
            const int ncalls = pick(0, 4);
            for (int k = 0; k < ncalls; ++k) {
                const auto& other = m.classes[static_cast<std::size_t>(pick(0, static_cast<int>(m.classes.size()) - 1))];
                if (other.methods.empty()) continue;
                const auto& target = other.methods[static_cast<std::size_t>(pick(0, static_cast<int>(other.methods.size()) - 1))];
                me.calls.push_back(target.qualified_name);
                m.relations.push_back({RelationKind::Calls, me.qualified_name, target.qualified_name, false});
            }
            if (chance(0.2)) m.relations.push_back({RelationKind::Calls, me.qualified_name, "java.util.List#size(0)", true});
        }
        if (c.superclass) {
            const bool external = c.superclass->starts_with("java.");
            m.relations.push_back({RelationKind::Inherits, c.qualified_name, *c.superclass, external});
        }
        const int ndeps = pick(0, 3);
        for (int k = 0; k < ndeps; ++k) {
            const auto& other = m.classes[static_cast<std::size_t>(pick(0, static_cast<int>(m.classes.size()) - 1))];
            m.relations.push_back({RelationKind::DependsOn, c.qualified_name, other.qualified_name, false});
        }
        if (chance(0.3)) m.relations.push_back({RelationKind::DependsOn, c.qualified_name, "java.util.Map", true});
    }

    std::map<std::string, PackageEntity> pkgs;
    for (const auto& c : m.classes) {
        m.files.push_back({c.file, c.package, {c.qualified_name}, c.loc + pick(0, 5)});
        m.relations.push_back({RelationKind::Contains, c.file, c.qualified_name, false});
        m.relations.push_back({RelationKind::Contains, c.package, c.file, false});
        auto& p = pkgs[c.package];
        p.name = c.package;
        p.files.push_back(c.file);
        p.classes.push_back(c.qualified_name);
    }
    for (auto& [name, p] : pkgs) m.packages.push_back(std::move(p));
    if (chance(0.2)) m.skipped.push_back({"broken/X.java", "line 3: unexpected token"});

    canonicalize(m);
    validate(m);
    return m;
}

std::filesystem::path temp_dir(const std::string& tag)
{
    static std::mt19937_64 rng(std::random_device{}());
    auto dir = std::filesystem::temp_directory_path() / fmt::format("smellvuln-{}-{:x}", tag, rng());
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

const std::map<std::string, std::set<std::string>>& expected_fixture_smells()
{
    // Brain Class and Brain Method hosts necessarily also carry Complex Class
    // and Long Method: those rules are implied by the brain rules' bounds.
    static const std::map<std::string, std::set<std::string>> expected{
        {"fx.BrainClass", {"Brain Class", "Brain Method", "Complex Class", "Long Method"}},
        {"fx.BrainMethodHost", {"Brain Method", "Complex Class", "Long Method"}},
        {"fx.ComplexClass", {"Complex Class"}},
        {"fx.CycA", {"Class Cyclic Dependency"}},
        {"fx.CycB", {"Class Cyclic Dependency"}},
        {"fx.DataClass", {"Data Class"}},
        {"fx.Envious", {"Feature Envy"}},
        {"fx.GodClass", {"God Class"}},
        {"fx.Hub", {"Hub-Like Dependency"}},
        {"fx.LargeClass", {"Large Class"}},
        {"fx.LazyClass", {"Lazy Class"}},
        {"fx.LongMethodHost", {"Long Method"}},
        {"fx.LongParams", {"Long Parameter List"}},
        {"fx.Popular", {"Shotgun Surgery"}},
        {"fx.RefusedChild", {"Refused Bequest"}},
        {"fx.Shape", {"Unhealthy Inheritance Hierarchy"}},
        {"fx.pa.A1", {"Package Cyclic Dependency"}},
        {"fx.pa.A2", {"Package Cyclic Dependency"}},
        {"fx.pb.B1", {"Package Cyclic Dependency"}},
        {"fx.pb.B2", {"Package Cyclic Dependency"}},
        {"fx.pu.U", {"Unstable Dependency"}},
        {"fx.pu.U2", {"Unstable Dependency"}},
    };
    return expected;
}

namespace {

using u128 = unsigned __int128;

u128 binomial(int n, int k)
{
    static const auto table = [] {
        std::vector<std::vector<u128>> t(61, std::vector<u128>(61, 0));
        for (int i = 0; i <= 60; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
        }
        return t;
    }();
    if (k < 0 || k > n) return 0;
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

} // namespace

double fisher_exact_oracle(const ContingencyTable& t)
{
    const int r1 = static_cast<int>(t.a + t.b), r2 = static_cast<int>(t.c + t.d);
    const int c1 = static_cast<int>(t.a + t.c), n = r1 + r2;
    if (n > 60) throw std::invalid_argument("oracle limited to N <= 60");
    // Every table's probability is C(r1, a) C(r2, c1 - a) / C(N, c1), so the
    // numerators compare exactly as integers.
    const u128 observed = binomial(r1, static_cast<int>(t.a)) * binomial(r2, static_cast<int>(t.c));
    u128 tail = 0;
    for (int a = std::max(0, c1 - r2); a <= std::min(r1, c1); ++a) {
        const u128 num = binomial(r1, a) * binomial(r2, c1 - a);
        if (num <= observed) tail += num;
    }
    return static_cast<double>(static_cast<long double>(tail) / static_cast<long double>(binomial(n, c1)));
}

std::set<std::string> mutually_reachable(const std::vector<std::string>& nodes,
                                         const std::map<std::string, std::set<std::string>>& out)
{
    const std::size_t n = nodes.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        const auto it = out.find(nodes[i]);
        if (it == out.end()) continue;
        for (std::size_t j = 0; j < n; ++j) reach[i][j] = it->second.contains(nodes[j]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
            }
        }
    }
    std::set<std::string> members;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && reach[i][j] && reach[j][i]) members.insert(nodes[i]);
        }
    }
    return members;
}

std::pair<std::vector<std::string>, std::map<std::string, std::set<std::string>>> random_digraph(std::mt19937_64& rng,
                                                                                                int max_nodes)
{
    const int n = std::uniform_int_distribution<int>(1, max_nodes)(rng);
    const double density = std::uniform_real_distribution<double>(0.0, 0.4)(rng);
    std::vector<std::string> nodes;
    for (int i = 0; i < n; ++i) nodes.push_back(fmt::format("n{}", 10 + i));
    std::map<std::string, std::set<std::string>> out;
    for (const auto& from : nodes) {
        auto& targets = out[from];
        for (const auto& to : nodes) {
            if (std::bernoulli_distribution(density)(rng)) targets.insert(to);
        }
    }
    return {nodes, out};
}

} // namespace testsupport
