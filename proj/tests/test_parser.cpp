#include <doctest.h>

#include <algorithm>
#include <random>

#include "java_syntax.hpp"
#include "smellvuln/corpus.hpp"
#include "smellvuln/error.hpp"
#include "support.hpp"

using namespace smellvuln;
using testsupport::find_class;
using testsupport::find_method;
using testsupport::parse_java;

namespace {

bool has_relation(const CodeFactsModel& m, RelationKind kind, const std::string& source, const std::string& target)
{
    return std::ranges::any_of(m.relations, [&](const Relation& r) {
        return r.kind == kind && r.source == source && r.target == target;
    });
}

} // namespace

TEST_CASE("lexer skips comments and tracks code lines")
{
    const auto result = java::lex("int a; // trailing\n/* block\n still */\n\nString s = \"x\\\"y\";\n");
    std::vector<std::string> texts;
    for (const auto& t : result.tokens) texts.push_back(t.text);
    CHECK(texts == std::vector<std::string>{"int", "a", ";", "String", "s", "=", "\"x\\\"y\"", ";", ""});
    CHECK(java::count_code_lines(result.code_line, 1, 5) == 2);
}

TEST_CASE("lexer rejects an unterminated string")
{
    CHECK_THROWS_AS(java::lex("String s = \"abc\n"), java::SyntaxError);
}

TEST_CASE("type erasure drops arguments and dimensions")
{
    CHECK(java::erase_type("Map<K, List<V>>[]") == std::pair<std::string, int>{"Map", 1});
    CHECK(java::erase_type("int...") == std::pair<std::string, int>{"int", 1});
    CHECK(java::erase_type("a.b.C") == std::pair<std::string, int>{"a.b.C", 0});
}

TEST_CASE("empty source root yields an empty model")
{
    const auto dir = testsupport::temp_dir("empty");
    const auto m = parse_corpus(dir, "s", "1");
    CHECK(m.classes.empty());
    CHECK(m.files.empty());
    CHECK(m.packages.empty());
    CHECK(m.relations.empty());
    std::filesystem::remove_all(dir);
}

TEST_CASE("missing source root is an input error")
{
    CHECK_THROWS_AS(parse_corpus("/nonexistent/smellvuln/root", "s", "1"), InputError);
}

TEST_CASE("single class with one field and one method")
{
    const auto m = parse_java({{"A.java", "class A { int x; void m(){ if(x>0) x++; } }"}});
    REQUIRE(m.classes.size() == 1);
    const auto& a = m.classes[0];
    CHECK(a.qualified_name == "A");
    CHECK(a.package == kDefaultPackage);
    REQUIRE(a.fields.size() == 1);
    CHECK(a.fields[0].name == "x");
    REQUIRE(a.methods.size() == 1);
    const auto& meth = a.methods[0];
    CHECK(meth.qualified_name == "A#m(0)");
    CHECK(meth.decision_points == std::vector<DecisionKind>{DecisionKind::If});
    CHECK(meth.local_accesses == std::vector<std::string>{"x"});
    CHECK(meth.foreign_accesses.empty());
    CHECK(a.loc == 1);
}

TEST_CASE("extends produces an inherits relation")
{
    const auto m = parse_java({{"p/A.java", "package p; public class A { }"},
                               {"p/B.java", "package p; public class B extends A { }"}});
    CHECK(find_class(m, "p.B").superclass == std::optional<std::string>("p.A"));
    CHECK(has_relation(m, RelationKind::Inherits, "p.B", "p.A"));
    CHECK(has_relation(m, RelationKind::Contains, "p/B.java", "p.B"));
    CHECK(has_relation(m, RelationKind::Contains, "p", "p/A.java"));
}

TEST_CASE("library supertypes are external")
{
    const auto m = parse_java({{"p/T.java", "package p; import java.util.ArrayList; public class T extends ArrayList<String> { }"}});
    CHECK(std::ranges::any_of(m.relations, [](const Relation& r) {
        return r.kind == RelationKind::Inherits && r.target == "java.util.ArrayList" && r.external;
    }));
}

TEST_CASE("decision points cover every construct")
{
    const auto m = parse_java({{"D.java", R"(class D {
  int f(int a, boolean b) {
    for (int i = 0; i < a; i++) { }
    while (a > 0 && b) { a--; }
    do { a++; } while (a < 3 || b);
    switch (a) { case 1: a = 2; break; case 2: a = 3; break; default: a = 0; }
    try { a = a / 0; } catch (RuntimeException e) { a = 1; }
    return b ? a : -a;
  }
})"}});
    const auto& f = find_method(m, "D#f(2)");
    std::vector<DecisionKind> kinds = f.decision_points;
    std::ranges::sort(kinds);
    CHECK(kinds == std::vector<DecisionKind>{DecisionKind::For, DecisionKind::While, DecisionKind::Do,
                                             DecisionKind::Case, DecisionKind::Case, DecisionKind::Catch,
                                             DecisionKind::Ternary, DecisionKind::And, DecisionKind::Or});
}

TEST_CASE("foreign and inherited accesses are separated")
{
    const auto m = parse_java({
        {"p/Base.java", "package p; public class Base { protected int shared; }"},
        {"p/Other.java", "package p; public class Other { public int open; private int hidden; public int getHidden() { return hidden; } }"},
        {"p/User.java", R"(package p;
public class User extends Base {
  private int own;
  int work(Other o) {
    own = shared + o.open + o.getHidden();
    return own;
  }
})"},
    });
    const auto& w = find_method(m, "p.User#work(1)");
    CHECK(w.local_accesses == std::vector<std::string>{"own"});
    CHECK(w.inherited_accesses == std::vector<AttributeAccess>{{"p.Base", "shared", false}});
    CHECK(w.foreign_accesses == std::vector<AttributeAccess>{{"p.Other", "hidden", true}, {"p.Other", "open", false}});
    CHECK(has_relation(m, RelationKind::AccessesField, "p.User#work(1)", "p.Other.open"));
    CHECK(has_relation(m, RelationKind::Calls, "p.User#work(1)", "p.Other#getHidden(0)"));
}

TEST_CASE("nested classes and overloads get distinct names")
{
    const auto m = parse_java({{"p/O.java", R"(package p;
public class O {
  static class In { void go() { } }
  void m(int a) { }
  void m(String s) { }
})"}});
    CHECK_NOTHROW(find_class(m, "p.O.In"));
    CHECK_NOTHROW(find_method(m, "p.O#m(1)"));
    CHECK_NOTHROW(find_method(m, "p.O#m(1)~2"));
}

TEST_CASE("files outside the subset are skipped, not fatal")
{
    const auto m = parse_java({{"Good.java", "class Good { }"}, {"Bad.java", "class Bad { void m( { }"}});
    CHECK(m.classes.size() == 1);
    REQUIRE(m.skipped.size() == 1);
    CHECK(m.skipped[0].path == "Bad.java");
    CHECK_FALSE(m.skipped[0].message.empty());
}

TEST_CASE("duplicate qualified names are a model error")
{
    CHECK_THROWS_AS(parse_java({{"a/X.java", "package p; class X { }"}, {"b/X.java", "package p; class X { }"}}),
                    ModelError);
}

TEST_CASE("every class has exactly one containing file relation")
{
    const auto m = parse_corpus(testsupport::fixture("smells"), "fx", "1");
    std::size_t file_to_class = 0;
    for (const auto& r : m.relations) {
        if (r.kind == RelationKind::Contains && r.target.find('/') == std::string::npos &&
            r.source.ends_with(".java")) {
            ++file_to_class;
        }
    }
    CHECK(file_to_class == m.classes.size());
    CHECK(m.skipped.empty());
}

TEST_CASE("parsing is independent of file order and thread count")
{
    std::vector<SourceFile> sources;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(testsupport::fixture("smells"))) {
        if (entry.path().extension() != ".java") continue;
        sources.push_back({std::filesystem::relative(entry.path(), testsupport::fixture("smells")).generic_string(),
                           testsupport::slurp(entry.path())});
    }
    REQUIRE(sources.size() > 20);
    const auto reference = parse_sources(sources, "fx", "1", ParseOptions{1});
    std::mt19937_64 rng(7);
    for (unsigned threads : {2u, 4u, 8u}) {
        std::ranges::shuffle(sources, rng);
        CHECK(parse_sources(sources, "fx", "1", ParseOptions{threads}) == reference);
    }
}
