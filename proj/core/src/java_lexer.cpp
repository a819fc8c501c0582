#include <algorithm>
#include <array>
#include <cctype>

#include <fmt/format.h>

#include "java_syntax.hpp"

namespace smellvuln::java {

SyntaxError::SyntaxError(int line, const std::string& message)
    : std::runtime_error(fmt::format("line {}: {}", line, message)), line_(line)
{
}

namespace {

constexpr std::array<std::string_view, 53> kKeywords{
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const",
    "continue", "default", "do", "double", "else", "enum", "extends", "final", "finally", "float",
    "for", "goto", "if", "implements", "import", "instanceof", "int", "interface", "long", "native",
    "new", "package", "private", "protected", "public", "return", "short", "static", "strictfp", "super",
    "switch", "synchronized", "this", "throw", "throws", "transient", "try", "void", "volatile", "while",
    "true", "false", "null",
};

constexpr std::array<std::string_view, 9> kPrimitives{
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "void",
};

// Longest match first. '>' is always emitted alone so that nested type
// arguments like List<List<String>> close one level per token.
constexpr std::array<std::string_view, 25> kOperators{
    "...", "<<=", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", "<<",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    "(", ")", "{", "}", ";",
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80; }

} // namespace

bool is_keyword(std::string_view word)
{
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool is_primitive(std::string_view word)
{
    return std::find(kPrimitives.begin(), kPrimitives.end(), word) != kPrimitives.end();
}

std::int64_t count_code_lines(const std::vector<bool>& code_line, int first, int last)
{
    std::int64_t n = 0;
    for (int l = std::max(first, 1); l <= last && l < static_cast<int>(code_line.size()); ++l) {
        if (code_line[l]) ++n;
    }
    return n;
}

LexResult lex(std::string_view src)
{
    LexResult out;
    int line = 1;
    std::size_t i = 0;
    const std::size_t n = src.size();

    auto mark = [&](int from, int to) {
        if (static_cast<int>(out.code_line.size()) <= to) out.code_line.resize(to + 1, false);
        for (int l = from; l <= to; ++l) out.code_line[l] = true;
    };
    auto push = [&](TokenKind kind, std::string text, int start_line) {
        mark(start_line, line);
        out.tokens.push_back(Token{kind, std::move(text), start_line});
    };

    while (i < n) {
        const char c = src[i];
        if (c == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '/') {
            while (i < n && src[i] != '\n') ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '*') {
            const int start = line;
            i += 2;
            while (i + 1 < n && !(src[i] == '*' && src[i + 1] == '/')) {
                if (src[i] == '\n') ++line;
                ++i;
            }
            if (i + 1 >= n) throw SyntaxError(start, "unterminated block comment");
            i += 2;
            continue;
        }

        const int start = line;
        const std::size_t begin = i;

        if (ident_start(static_cast<unsigned char>(c))) {
            while (i < n && ident_char(static_cast<unsigned char>(src[i]))) ++i;
            push(TokenKind::Identifier, std::string(src.substr(begin, i - begin)), start);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
            while (i < n) {
                const char d = src[i];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.') {
                    ++i;
                } else if ((d == '+' || d == '-') && (src[i - 1] == 'e' || src[i - 1] == 'E' ||
                                                      src[i - 1] == 'p' || src[i - 1] == 'P')) {
                    ++i;
                } else {
                    break;
                }
            }
            push(TokenKind::Number, std::string(src.substr(begin, i - begin)), start);
            continue;
        }
        if (c == '"' && src.substr(i, 3) == "\"\"\"") {
            i += 3;
            while (i + 2 < n && src.substr(i, 3) != "\"\"\"") {
                if (src[i] == '\\') ++i;
                else if (src[i] == '\n') ++line;
                ++i;
            }
            if (i + 2 >= n) throw SyntaxError(start, "unterminated text block");
            i += 3;
            push(TokenKind::String, "\"\"\"", start);
            continue;
        }
        if (c == '"' || c == '\'') {
            ++i;
            while (i < n && src[i] != c) {
                if (src[i] == '\\') ++i;
                if (i < n && src[i] == '\n') throw SyntaxError(start, "unterminated literal");
                ++i;
            }
            if (i >= n) throw SyntaxError(start, "unterminated literal");
            ++i;
            push(c == '"' ? TokenKind::String : TokenKind::Char, std::string(src.substr(begin, i - begin)), start);
            continue;
        }

        std::string_view rest = src.substr(i);
        auto op = std::find_if(kOperators.begin(), kOperators.end(),
                               [&](std::string_view o) { return rest.starts_with(o); });
        const std::size_t len = op != kOperators.end() ? op->size() : 1;
        i += len;
        push(TokenKind::Punct, std::string(rest.substr(0, len)), start);
    }

    out.tokens.push_back(Token{TokenKind::End, "", line});
    if (static_cast<int>(out.code_line.size()) <= line) out.code_line.resize(line + 1, false);
    return out;
}

std::pair<std::string, int> erase_type(std::string_view type_text)
{
    std::string base;
    int depth = 0;
    for (char ch : type_text) {
        if (ch == '<') ++depth;
        else if (ch == '>') --depth;
        else if (depth == 0 && ch != ' ') base.push_back(ch);
    }
    int dims = 0;
    if (base.ends_with("...")) {
        base.resize(base.size() - 3);
        ++dims;
    }
    while (base.ends_with("[]")) {
        base.resize(base.size() - 2);
        ++dims;
    }
    return {base, dims};
}

} // namespace smellvuln::java
