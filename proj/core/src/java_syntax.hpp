#pragma once

// Internal syntax layer of the Java-subset front-end. Nothing here is part
// of the installed interface; corpus.cpp turns RawFile trees into a
// CodeFactsModel.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smellvuln/model.hpp"

namespace smellvuln::java {

enum class TokenKind { Identifier, Number, String, Char, Punct, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    int line = 0;
};

struct LexResult {
    std::vector<Token> tokens;   ///< always terminated by an End token
    std::vector<bool> code_line; ///< index = line number (1-based); true if a token touches the line
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

LexResult lex(std::string_view source);

bool is_keyword(std::string_view word);
bool is_primitive(std::string_view word);

/// Counts code lines in [first, last] (inclusive, 1-based).
std::int64_t count_code_lines(const std::vector<bool>& code_line, int first, int last);

// ---------------------------------------------------------------------------

/// A postfix expression such as `a.b.c(x)[i].d` or `new Foo(1).bar()`,
/// recorded before any name resolution.
struct RawChain {
    enum class Root { Name, Implicit, This, Super, New, Unknown };
    struct Segment {
        enum class Kind { Field, Call, Index };
        Kind kind = Kind::Field;
        std::string name;
        std::size_t argc = 0;
    };

    Root root = Root::Unknown;
    std::string name;      ///< identifier (Name), type text (New)
    std::size_t new_argc = 0;
    std::vector<Segment> segments;
};

struct RawBody {
    std::vector<DecisionKind> decisions;
    std::vector<RawChain> chains;
    std::vector<std::pair<std::string, std::string>> locals; ///< name, declared type ("" if inferred)
    std::vector<std::string> type_uses;
    int max_nesting = 0;
};

struct RawParam {
    std::string name;
    std::string type_text;
};

struct RawField {
    std::string name;
    std::string type_text;
    Visibility visibility = Visibility::Package;
    bool is_static = false;
};

struct RawMethod {
    std::string name;
    std::vector<RawParam> params;
    std::string return_type;
    std::vector<std::string> throws;
    std::set<std::string> type_params;
    Visibility visibility = Visibility::Package;
    bool is_static = false;
    bool is_abstract = false;
    bool is_constructor = false;
    bool varargs = false;
    int first_line = 0;
    int last_line = 0;
    RawBody body;
};

struct RawClass {
    std::string name;
    ClassKind kind = ClassKind::Class;
    bool is_abstract = false;
    std::set<std::string> type_params;
    std::vector<std::string> extends;
    std::vector<std::string> implements;
    std::vector<RawField> fields;
    std::vector<RawMethod> methods;
    std::vector<RawClass> nested;
    RawBody init_body; ///< field initializers, initializer blocks, enum constant arguments
    int first_line = 0;
    int last_line = 0;
};

struct RawFile {
    std::string path;
    std::string package; ///< empty for the unnamed package
    std::vector<std::string> imports;          ///< single-type imports, fully qualified
    std::vector<std::string> wildcard_imports; ///< `import a.b.*;` -> "a.b"
    std::vector<RawClass> classes;
    std::vector<bool> code_line;
    std::int64_t loc = 0;
};

/// Parses one compilation unit. Throws SyntaxError on input outside the
/// supported subset.
RawFile parse_compilation_unit(std::string path, std::string_view source);

/// Strips type arguments, array dimensions and varargs markers:
/// "Map<K, V>[]" -> {"Map", 1}.
std::pair<std::string, int> erase_type(std::string_view type_text);

} // namespace smellvuln::java
