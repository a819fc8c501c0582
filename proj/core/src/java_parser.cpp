#include <algorithm>
#include <initializer_list>

#include <fmt/format.h>

#include "java_syntax.hpp"

namespace smellvuln::java {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct Modifiers {
    std::optional<Visibility> visibility;
    bool is_static = false;
    bool is_abstract = false;
    bool is_default = false;
    int first_line = 0; ///< line of the first non-annotation modifier, 0 if none
};

class Parser {
public:
    Parser(std::string path, std::string_view source) : lexed_(lex(source)), toks_(lexed_.tokens)
    {
        file_.path = std::move(path);
    }

    RawFile parse()
    {
        parse_header();
        while (!at_end()) {
            if (accept(";")) continue;
            Modifiers mods = parse_modifiers();
            if (!starts_type_decl(pos_)) fail("expected a type declaration");
            file_.classes.push_back(parse_type_decl(mods));
        }
        file_.loc = count_code_lines(lexed_.code_line, 1, static_cast<int>(lexed_.code_line.size()) - 1);
        file_.code_line = std::move(lexed_.code_line);
        return std::move(file_);
    }

private:
    LexResult lexed_;
    const std::vector<Token>& toks_;
    std::size_t pos_ = 0;
    RawFile file_;

    // -- token helpers ------------------------------------------------------

    const Token& tok(std::size_t p) const { return toks_[std::min(p, toks_.size() - 1)]; }
    const Token& peek(std::size_t ahead = 0) const { return tok(pos_ + ahead); }
    bool at_end() const { return peek().kind == TokenKind::End; }
    bool is(std::size_t p, std::string_view text) const
    {
        const Token& t = tok(p);
        return t.kind != TokenKind::End && t.kind != TokenKind::String && t.kind != TokenKind::Char &&
               t.text == text;
    }
    bool at(std::string_view text) const { return is(pos_, text); }
    bool accept(std::string_view text)
    {
        if (!at(text)) return false;
        ++pos_;
        return true;
    }
    void expect(std::string_view text)
    {
        if (!accept(text)) fail(fmt::format("expected '{}'", text));
    }
    [[noreturn]] void fail(const std::string& message) const
    {
        const Token& t = peek();
        throw SyntaxError(t.line, t.kind == TokenKind::End ? message + " before end of file"
                                                           : fmt::format("{} near '{}'", message, t.text));
    }
    bool is_name(std::size_t p) const
    {
        const Token& t = tok(p);
        return t.kind == TokenKind::Identifier && !is_keyword(t.text);
    }
    std::string expect_name()
    {
        if (!is_name(pos_)) fail("expected an identifier");
        return toks_[pos_++].text;
    }

    /// Position just after the bracket matching the one at p.
    std::size_t match(std::size_t p) const
    {
        const std::string& open = tok(p).text;
        const std::string close = open == "(" ? ")" : open == "[" ? "]" : "}";
        int depth = 0;
        for (std::size_t i = p; i < toks_.size(); ++i) {
            const Token& t = toks_[i];
            if (t.kind != TokenKind::Punct) continue;
            if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
            else if (t.text == ")" || t.text == "]" || t.text == "}") {
                if (--depth == 0) {
                    if (t.text != close) throw SyntaxError(t.line, "mismatched bracket");
                    return i + 1;
                }
            }
        }
        throw SyntaxError(tok(p).line, fmt::format("unbalanced '{}'", open));
    }

    /// If a type-argument list starts at p, the position after its closing '>'.
    std::size_t skip_type_args(std::size_t p) const
    {
        if (!is(p, "<")) return npos;
        int depth = 0;
        for (std::size_t i = p; i < toks_.size() && i < p + 256; ++i) {
            const Token& t = toks_[i];
            if (t.kind == TokenKind::Identifier) continue;
            if (t.kind != TokenKind::Punct) return npos;
            if (t.text == "<") ++depth;
            else if (t.text == ">") {
                if (--depth == 0) return i + 1;
            } else if (t.text != "." && t.text != "," && t.text != "?" && t.text != "&" && t.text != "[" &&
                       t.text != "]" && t.text != "@") {
                return npos;
            }
        }
        return npos;
    }

    /// Position after a type starting at p, or npos.
    std::size_t scan_type(std::size_t p, bool allow_varargs = false) const
    {
        const Token& t = tok(p);
        if (t.kind != TokenKind::Identifier) return npos;
        if (is_keyword(t.text) && !is_primitive(t.text)) return npos;
        ++p;
        if (!is_primitive(t.text)) {
            for (;;) {
                if (is(p, "<")) {
                    p = skip_type_args(p);
                    if (p == npos) return npos;
                }
                if (is(p, ".") && is_name(p + 1)) {
                    p += 2;
                    continue;
                }
                break;
            }
        }
        while (is(p, "[") && is(p + 1, "]")) p += 2;
        if (allow_varargs && is(p, "...")) ++p;
        return p;
    }

    std::string text_of(std::size_t from, std::size_t to) const
    {
        std::string out;
        for (std::size_t i = from; i < to; ++i) {
            const std::string& s = toks_[i].text;
            if (s == "extends" || s == "super" || s == "&") out += " " + s + " ";
            else if (s == ",") out += ", ";
            else out += s;
        }
        return out;
    }

    std::string parse_type(bool allow_varargs = false)
    {
        const std::size_t end = scan_type(pos_, allow_varargs);
        if (end == npos) fail("expected a type");
        std::string text = text_of(pos_, end);
        pos_ = end;
        return text;
    }

    /// Type-parameter names of a `<T extends X, U>` list at pos_; consumes it.
    std::set<std::string> parse_type_params()
    {
        std::set<std::string> names;
        const std::size_t end = skip_type_args(pos_);
        if (end == npos) fail("malformed type parameters");
        int depth = 0;
        for (std::size_t i = pos_; i < end; ++i) {
            if (is(i, "<")) ++depth;
            else if (is(i, ">")) --depth;
            else if (depth == 1 && is_name(i) && (is(i - 1, "<") || is(i - 1, ","))) names.insert(toks_[i].text);
        }
        pos_ = end;
        return names;
    }

    /// Advances over one expression and stops at any token in `stops` at
    /// bracket depth zero. Type arguments of `new T<A, B>` and `.<A, B>m()`
    /// are skipped so their commas do not end the expression.
    std::size_t find_end(std::size_t p, std::initializer_list<std::string_view> stops) const
    {
        while (tok(p).kind != TokenKind::End) {
            const Token& t = tok(p);
            if (t.kind == TokenKind::Punct) {
                for (auto s : stops) {
                    if (t.text == s) return p;
                }
                if (t.text == "(" || t.text == "[" || t.text == "{") {
                    p = match(p);
                    continue;
                }
                if (t.text == ")" || t.text == "]" || t.text == "}") return p;
                if (t.text == "<" && (is(p - 1, ".") || after_new_type(p))) {
                    if (std::size_t q = skip_type_args(p); q != npos) {
                        p = q;
                        continue;
                    }
                }
            }
            ++p;
        }
        return p;
    }

    bool after_new_type(std::size_t lt) const
    {
        std::size_t q = lt;
        while (q >= 2 && is_name(q - 1) && is(q - 2, ".")) q -= 2;
        return q >= 2 && is_name(q - 1) && is(q - 2, "new");
    }

    std::size_t count_args(std::size_t open) const
    {
        const std::size_t close = match(open) - 1;
        if (open + 1 == close) return 0;
        std::size_t n = 1;
        std::size_t p = open + 1;
        for (;;) {
            p = find_end(p, {","});
            if (p >= close || !is(p, ",")) break;
            ++n;
            ++p;
        }
        return n;
    }

    // -- annotations and modifiers ------------------------------------------

    void skip_annotation()
    {
        expect("@");
        expect_name();
        while (at(".") && is_name(pos_ + 1)) pos_ += 2;
        if (at("(")) pos_ = match(pos_);
    }

    Modifiers parse_modifiers()
    {
        Modifiers mods;
        for (;;) {
            if (at("@") && !is(pos_ + 1, "interface")) {
                skip_annotation();
                continue;
            }
            const Token& t = peek();
            if (t.kind != TokenKind::Identifier) break;
            const std::string& w = t.text;
            bool consumed = true;
            if (w == "public") mods.visibility = Visibility::Public;
            else if (w == "protected") mods.visibility = Visibility::Protected;
            else if (w == "private") mods.visibility = Visibility::Private;
            else if (w == "static") mods.is_static = true;
            else if (w == "abstract") mods.is_abstract = true;
            else if (w == "default" && !is(pos_ + 1, ":") && !is(pos_ + 1, "->")) mods.is_default = true;
            else if (w == "final" || w == "native" || w == "synchronized" || w == "transient" || w == "volatile" ||
                     w == "strictfp" || w == "sealed") {
                if (w == "synchronized" && is(pos_ + 1, "(")) break;
            } else if (w == "non" && is(pos_ + 1, "-") && is(pos_ + 2, "sealed")) {
                if (mods.first_line == 0) mods.first_line = t.line;
                pos_ += 3;
                continue;
            } else {
                consumed = false;
            }
            if (!consumed) break;
            if (mods.first_line == 0) mods.first_line = t.line;
            ++pos_;
        }
        return mods;
    }

    // -- compilation unit ----------------------------------------------------

    void parse_header()
    {
        std::size_t save = pos_;
        while (at("@") && !is(pos_ + 1, "interface")) skip_annotation();
        if (accept("package")) {
            std::string name = expect_name();
            while (accept(".")) name += "." + expect_name();
            expect(";");
            file_.package = name;
        } else {
            pos_ = save;
        }
        while (at("import")) {
            ++pos_;
            const bool is_static = accept("static");
            std::string name = expect_name();
            bool wildcard = false;
            while (accept(".")) {
                if (accept("*")) {
                    wildcard = true;
                    break;
                }
                name += "." + expect_name();
            }
            expect(";");
            if (is_static) continue;
            (wildcard ? file_.wildcard_imports : file_.imports).push_back(name);
        }
    }

    bool starts_type_decl(std::size_t p) const
    {
        if (is(p, "class") || is(p, "interface") || is(p, "enum")) return true;
        if (is(p, "@") && is(p + 1, "interface")) return true;
        return is(p, "record") && is_name(p + 1) && (is(p + 2, "(") || is(p + 2, "<"));
    }

    RawClass parse_type_decl(const Modifiers& mods)
    {
        RawClass cls;
        cls.first_line = mods.first_line != 0 ? mods.first_line : peek().line;
        cls.is_abstract = mods.is_abstract;

        bool is_record = false;
        bool is_annotation = false;
        if (accept("class")) {
            cls.kind = ClassKind::Class;
        } else if (accept("interface")) {
            cls.kind = ClassKind::Interface;
            cls.is_abstract = true;
        } else if (accept("enum")) {
            cls.kind = ClassKind::Enum;
        } else if (accept("record")) {
            cls.kind = ClassKind::Class;
            is_record = true;
        } else {
            expect("@");
            expect("interface");
            cls.kind = ClassKind::Interface;
            is_annotation = true;
        }
        cls.name = expect_name();
        if (at("<")) cls.type_params = parse_type_params();

        if (is_record) {
            expect("(");
            while (!accept(")")) {
                parse_modifiers();
                RawField f;
                f.type_text = parse_type(true);
                f.name = expect_name();
                f.visibility = Visibility::Private;
                cls.fields.push_back(std::move(f));
                if (!accept(",") && !at(")")) fail("expected ',' in record header");
            }
        }

        for (;;) {
            if (accept("extends")) {
                do {
                    cls.extends.push_back(parse_type());
                } while (accept(","));
            } else if (accept("implements")) {
                do {
                    cls.implements.push_back(parse_type());
                } while (accept(","));
            } else if (accept("permits")) {
                do {
                    parse_type();
                } while (accept(","));
            } else {
                break;
            }
        }

        if (is_annotation) {
            if (!at("{")) fail("expected annotation body");
            pos_ = match(pos_);
        } else {
            parse_class_body(cls);
        }
        cls.last_line = tok(pos_ - 1).line;
        return cls;
    }

    void parse_enum_constants(RawClass& cls)
    {
        for (;;) {
            while (at("@")) skip_annotation();
            if (at(";")) {
                ++pos_;
                return;
            }
            if (at("}")) return;
            RawField constant;
            constant.name = expect_name();
            constant.type_text = cls.name;
            constant.visibility = Visibility::Public;
            constant.is_static = true;
            cls.fields.push_back(std::move(constant));
            if (at("(")) {
                const std::size_t end = match(pos_);
                scan_expression(cls.init_body, pos_ + 1, end - 1, 0);
                pos_ = end;
            }
            if (at("{")) parse_folded_class_body(cls.init_body, 0);
            if (accept(",")) continue;
            if (accept(";")) return;
            if (at("}")) return;
            fail("malformed enum constant list");
        }
    }

    void parse_class_body(RawClass& cls)
    {
        expect("{");
        if (cls.kind == ClassKind::Enum) parse_enum_constants(cls);
        const bool in_interface = cls.kind == ClassKind::Interface;

        while (!accept("}")) {
            if (at_end()) fail("unterminated class body");
            if (accept(";")) continue;
            const std::size_t member_start = pos_;
            Modifiers mods = parse_modifiers();
            const int first_line = mods.first_line != 0 ? mods.first_line : peek().line;

            if (at("{")) {
                parse_block(cls.init_body, 0);
                continue;
            }
            if (starts_type_decl(pos_)) {
                cls.nested.push_back(parse_type_decl(mods));
                continue;
            }

            std::set<std::string> method_type_params;
            if (at("<")) method_type_params = parse_type_params();

            const bool is_ctor = is_name(pos_) && peek().text == cls.name && (is(pos_ + 1, "(") || is(pos_ + 1, "{"));
            RawMethod method;
            method.type_params = std::move(method_type_params);
            method.first_line = first_line;
            method.visibility = mods.visibility.value_or(in_interface ? Visibility::Public : Visibility::Package);
            method.is_static = mods.is_static;

            if (is_ctor) {
                method.name = expect_name();
                method.is_constructor = true;
            } else {
                const std::string type = parse_type();
                if (!is_name(pos_)) {
                    pos_ = member_start;
                    fail("expected a member declaration");
                }
                const std::string name = expect_name();
                if (!at("(")) {
                    parse_field_declarators(cls, type, name, mods, in_interface);
                    continue;
                }
                method.name = name;
                method.return_type = type;
            }

            if (at("(")) parse_params(method);
            while (at("[") && is(pos_ + 1, "]")) pos_ += 2;
            if (accept("throws")) {
                do {
                    method.throws.push_back(parse_type());
                } while (accept(","));
            }
            if (at("{")) {
                register_lambda_params(method.body, pos_, match(pos_));
                parse_block(method.body, 0);
                method.is_abstract = false;
            } else {
                if (accept("default")) pos_ = find_end(pos_, {";"});
                expect(";");
                method.is_abstract = mods.is_abstract || (in_interface && !mods.is_static && !mods.is_default);
            }
            method.last_line = tok(pos_ - 1).line;
            cls.methods.push_back(std::move(method));
        }
    }

    void parse_params(RawMethod& method)
    {
        expect("(");
        while (!accept(")")) {
            parse_modifiers();
            RawParam param;
            param.type_text = parse_type(true);
            if (param.type_text.ends_with("...")) method.varargs = true;
            if (at("this")) {
                ++pos_; // receiver parameter
            } else {
                param.name = expect_name();
                while (at("[") && is(pos_ + 1, "]")) {
                    pos_ += 2;
                    param.type_text += "[]";
                }
                method.params.push_back(std::move(param));
            }
            if (!accept(",") && !at(")")) fail("expected ',' between parameters");
        }
    }

    void parse_field_declarators(RawClass& cls, const std::string& type, std::string name, const Modifiers& mods,
                                 bool in_interface)
    {
        for (;;) {
            RawField field;
            field.name = std::move(name);
            field.type_text = type;
            while (at("[") && is(pos_ + 1, "]")) {
                pos_ += 2;
                field.type_text += "[]";
            }
            field.visibility = mods.visibility.value_or(in_interface ? Visibility::Public : Visibility::Package);
            field.is_static = mods.is_static || in_interface;
            cls.fields.push_back(std::move(field));
            if (accept("=")) {
                const std::size_t end = find_end(pos_, {",", ";"});
                register_lambda_params(cls.init_body, pos_, end);
                scan_expression(cls.init_body, pos_, end, 0);
                pos_ = end;
            }
            if (accept(",")) {
                name = expect_name();
                continue;
            }
            expect(";");
            return;
        }
    }

    /// Members of an anonymous or local class, folded into the enclosing body.
    void parse_folded_class_body(RawBody& body, int depth)
    {
        expect("{");
        while (!accept("}")) {
            if (at_end()) fail("unterminated class body");
            if (accept(";")) continue;
            parse_modifiers();
            if (at("{")) {
                parse_block(body, depth);
                continue;
            }
            if (starts_type_decl(pos_)) {
                parse_folded_type_decl(body, depth);
                continue;
            }
            if (at("<")) parse_type_params();
            if (is_name(pos_) && is(pos_ + 1, "(")) {
                // constructor of a local class
                ++pos_;
            } else {
                const std::string type = parse_type();
                const std::string name = expect_name();
                if (!at("(")) {
                    for (std::string n = name;;) {
                        body.locals.emplace_back(n, type);
                        body.type_uses.push_back(type);
                        while (at("[") && is(pos_ + 1, "]")) pos_ += 2;
                        if (accept("=")) {
                            const std::size_t end = find_end(pos_, {",", ";"});
                            scan_expression(body, pos_, end, depth);
                            pos_ = end;
                        }
                        if (accept(",")) {
                            n = expect_name();
                            continue;
                        }
                        expect(";");
                        break;
                    }
                    continue;
                }
                body.type_uses.push_back(type);
            }
            RawMethod scratch_method;
            parse_params(scratch_method);
            for (auto& p : scratch_method.params) {
                body.locals.emplace_back(p.name, p.type_text);
                body.type_uses.push_back(p.type_text);
            }
            while (at("[") && is(pos_ + 1, "]")) pos_ += 2;
            if (accept("throws")) {
                do {
                    parse_type();
                } while (accept(","));
            }
            if (at("{")) {
                register_lambda_params(body, pos_, match(pos_));
                parse_block(body, depth);
            } else {
                expect(";");
            }
        }
    }

    void parse_folded_type_decl(RawBody& body, int depth)
    {
        if (accept("@")) {
            expect("interface");
            expect_name();
            pos_ = match(pos_);
            return;
        }
        const bool is_record = at("record");
        ++pos_; // class / interface / enum / record
        expect_name();
        if (at("<")) parse_type_params();
        if (is_record && at("(")) pos_ = match(pos_);
        while (at("extends") || at("implements") || at("permits")) {
            ++pos_;
            do {
                body.type_uses.push_back(parse_type());
            } while (accept(","));
        }
        if (!at("{")) fail("expected class body");
        // Enum constants of a local enum are skipped as a unit.
        parse_folded_class_body_or_enum(body, depth);
    }

    void parse_folded_class_body_or_enum(RawBody& body, int depth)
    {
        // A local enum body starts with constants; treat it as a balanced
        // region scanned for expressions only.
        std::size_t p = pos_ + 1;
        if (is_name(p) && (is(p + 1, ",") || is(p + 1, ";") || is(p + 1, "}") || is(p + 1, "("))) {
            const std::size_t end = match(pos_);
            scan_expression(body, pos_ + 1, end - 1, depth);
            pos_ = end;
            return;
        }
        parse_folded_class_body(body, depth);
    }

    // -- statements ----------------------------------------------------------

    void note_depth(RawBody& body, int depth) { body.max_nesting = std::max(body.max_nesting, depth); }

    void parse_block(RawBody& body, int depth)
    {
        expect("{");
        while (!accept("}")) {
            if (at_end()) fail("unterminated block");
            parse_statement(body, depth);
        }
    }

    void paren_expression(RawBody& body, int depth)
    {
        if (!at("(")) fail("expected '('");
        const std::size_t end = match(pos_);
        scan_expression(body, pos_ + 1, end - 1, depth);
        pos_ = end;
    }

    void parse_statement(RawBody& body, int depth)
    {
        note_depth(body, depth);
        const Token& t = peek();

        if (at("{")) {
            parse_block(body, depth);
            return;
        }
        if (accept(";")) return;

        if (t.kind == TokenKind::Identifier) {
            const std::string& w = t.text;
            if (w == "if") {
                ++pos_;
                paren_expression(body, depth);
                body.decisions.push_back(DecisionKind::If);
                parse_statement(body, depth + 1);
                if (accept("else")) {
                    if (at("if")) parse_statement(body, depth);
                    else parse_statement(body, depth + 1);
                }
                return;
            }
            if (w == "for") {
                ++pos_;
                if (!at("(")) fail("expected '(' after for");
                const std::size_t end = match(pos_);
                parse_for_header(body, pos_ + 1, end - 1, depth);
                pos_ = end;
                body.decisions.push_back(DecisionKind::For);
                parse_statement(body, depth + 1);
                return;
            }
            if (w == "while") {
                ++pos_;
                paren_expression(body, depth);
                body.decisions.push_back(DecisionKind::While);
                parse_statement(body, depth + 1);
                return;
            }
            if (w == "do") {
                ++pos_;
                body.decisions.push_back(DecisionKind::Do);
                parse_statement(body, depth + 1);
                expect("while");
                paren_expression(body, depth);
                expect(";");
                return;
            }
            if (w == "switch") {
                parse_switch(body, depth);
                accept(";");
                return;
            }
            if (w == "try") {
                ++pos_;
                if (at("(")) {
                    const std::size_t end = match(pos_);
                    std::size_t p = pos_ + 1;
                    while (p < end - 1) {
                        const std::size_t stop = find_end(p, {";"});
                        parse_simple_statement_range(body, p, std::min(stop, end - 1), depth);
                        p = stop + 1;
                    }
                    pos_ = end;
                }
                parse_block(body, depth + 1);
                while (at("catch")) {
                    ++pos_;
                    body.decisions.push_back(DecisionKind::Catch);
                    expect("(");
                    parse_modifiers();
                    std::string first_type = parse_type();
                    body.type_uses.push_back(first_type);
                    while (accept("|")) body.type_uses.push_back(parse_type());
                    body.locals.emplace_back(expect_name(), first_type);
                    expect(")");
                    parse_block(body, depth + 1);
                }
                if (accept("finally")) parse_block(body, depth + 1);
                return;
            }
            if (w == "synchronized" && is(pos_ + 1, "(")) {
                ++pos_;
                paren_expression(body, depth);
                parse_block(body, depth + 1);
                return;
            }
            if (w == "return" || w == "throw" || w == "assert") {
                ++pos_;
                const std::size_t end = find_end(pos_, {";"});
                register_lambda_params(body, pos_, end);
                scan_expression(body, pos_, end, depth);
                pos_ = end;
                expect(";");
                return;
            }
            if (w == "break" || w == "continue") {
                pos_ = find_end(pos_, {";"});
                expect(";");
                return;
            }
            if (w == "else" || w == "case" || w == "catch" || w == "finally") fail("misplaced '" + w + "'");
            if (is_name(pos_) && is(pos_ + 1, ":") ) {
                pos_ += 2; // label
                parse_statement(body, depth);
                return;
            }
            if (w == "yield" && !is(pos_ + 1, "=") && !is(pos_ + 1, "(") && !is(pos_ + 1, ".")) {
                ++pos_;
                const std::size_t end = find_end(pos_, {";"});
                scan_expression(body, pos_, end, depth);
                pos_ = end;
                expect(";");
                return;
            }
            const std::size_t save = pos_;
            parse_modifiers();
            if (starts_type_decl(pos_)) {
                parse_folded_type_decl(body, depth);
                return;
            }
            pos_ = save;
        }

        const std::size_t end = find_end(pos_, {";"});
        parse_simple_statement_range(body, pos_, end, depth);
        pos_ = end;
        expect(";");
    }

    /// A local declaration or an expression statement in [from, to).
    void parse_simple_statement_range(RawBody& body, std::size_t from, std::size_t to, int depth)
    {
        register_lambda_params(body, from, to);
        std::size_t p = from;
        if (try_local_declaration(body, p, to, depth)) return;
        scan_expression(body, from, to, depth);
    }

    /// Recognizes `[final] Type name [= init] {, name [= init]}` in [p, to).
    /// Returns false (and consumes nothing) if the range is not a declaration.
    /// On an enhanced-for header (`Type name : expr`) scans the iterable too.
    bool try_local_declaration(RawBody& body, std::size_t p, std::size_t to, int depth)
    {
        const std::size_t save = pos_;
        pos_ = p;
        while (at("final") || (at("@") && !is(pos_ + 1, "interface"))) {
            if (at("@")) skip_annotation();
            else ++pos_;
        }
        const std::size_t type_begin = pos_;
        const std::size_t type_end = scan_type(type_begin);
        if (type_end == npos || type_end >= to || !is_name(type_end)) {
            pos_ = save;
            return false;
        }
        const std::size_t after_name = type_end + 1;
        if (!(after_name >= to || is(after_name, "=") || is(after_name, ",") || is(after_name, ":") ||
              is(after_name, "[") || is(after_name, ";"))) {
            pos_ = save;
            return false;
        }
        const std::string type = text_of(type_begin, type_end);
        const bool inferred = type == "var";
        if (!inferred) body.type_uses.push_back(type);
        pos_ = type_end;
        while (pos_ < to) {
            std::string name = expect_name();
            std::string declared = inferred ? "" : type;
            while (at("[") && is(pos_ + 1, "]")) {
                pos_ += 2;
                declared += "[]";
            }
            body.locals.emplace_back(std::move(name), std::move(declared));
            if (accept("=") || accept(":")) {
                const std::size_t end = std::min(find_end(pos_, {",", ";"}), to);
                scan_expression(body, pos_, end, depth);
                pos_ = end;
            }
            if (pos_ < to && !accept(",")) break;
        }
        pos_ = save;
        return true;
    }

    void parse_for_header(RawBody& body, std::size_t from, std::size_t to, int depth)
    {
        register_lambda_params(body, from, to);
        std::size_t p = from;
        while (p < to) {
            const std::size_t stop = std::min(find_end(p, {";"}), to);
            if (!try_local_declaration(body, p, stop, depth)) {
                // update clauses separated by commas
                std::size_t q = p;
                while (q < stop) {
                    const std::size_t part = std::min(find_end(q, {","}), stop);
                    scan_expression(body, q, part, depth);
                    q = part + 1;
                }
            }
            p = stop + 1;
        }
    }

    void parse_switch(RawBody& body, int depth)
    {
        expect("switch");
        paren_expression(body, depth);
        expect("{");
        while (!accept("}")) {
            if (at_end()) fail("unterminated switch");
            bool arrow = false;
            if (at("case") || at("default")) {
                if (at("case")) body.decisions.push_back(DecisionKind::Case);
                ++pos_;
                // Labels are constants or type patterns; only the terminator matters.
                std::size_t p = pos_;
                while (tok(p).kind != TokenKind::End && !is(p, ":") && !is(p, "->")) {
                    if (is(p, "(") || is(p, "[") || is(p, "{")) p = match(p);
                    else ++p;
                }
                if (tok(p).kind == TokenKind::End) fail("unterminated case label");
                arrow = is(p, "->");
                pos_ = p + 1;
            } else {
                fail("expected 'case' or 'default'");
            }
            if (arrow) {
                note_depth(body, depth + 1);
                if (at("{")) {
                    parse_block(body, depth + 1);
                } else {
                    parse_statement(body, depth + 1);
                }
                continue;
            }
            while (!at("case") && !at("default") && !at("}")) {
                if (at_end()) fail("unterminated switch");
                parse_statement(body, depth + 1);
            }
        }
    }

    // -- expressions ---------------------------------------------------------

    /// Pre-registers parameters of every lambda in [from, to) as locals so
    /// that their uses are not mistaken for attribute accesses.
    void register_lambda_params(RawBody& body, std::size_t from, std::size_t to)
    {
        for (std::size_t p = from; p < to && p < toks_.size(); ++p) {
            if (!is(p, "->") || p == 0) continue;
            if (is_name(p - 1)) {
                body.locals.emplace_back(toks_[p - 1].text, "");
                continue;
            }
            if (!is(p - 1, ")")) continue;
            // walk back to the matching '('
            int depth = 0;
            std::size_t q = p - 1;
            for (;; --q) {
                if (is(q, ")")) ++depth;
                else if (is(q, "(") && --depth == 0) break;
                if (q == 0) break;
            }
            for (std::size_t k = q + 1; k + 1 < p; ++k) {
                if (is_name(k) && (is(k + 1, ",") || is(k + 1, ")"))) {
                    std::string type;
                    if (k > q + 1 && (is_name(k - 1) || is(k - 1, ">") || is(k - 1, "]"))) {
                        std::size_t b = k - 1;
                        while (b > q + 1 && !is(b - 1, ",") && !is(b - 1, "(")) --b;
                        type = text_of(b, k);
                    }
                    body.locals.emplace_back(toks_[k].text, type);
                }
            }
        }
    }

    bool is_wildcard(std::size_t p) const
    {
        return is(p - 1, "<") || is(p + 1, ">") || is(p + 1, "extends") || is(p + 1, "super");
    }

    void scan_expression(RawBody& body, std::size_t from, std::size_t to, int depth)
    {
        std::size_t p = from;
        while (p < to) {
            const Token& t = toks_[p];
            if (t.kind == TokenKind::End) return;

            if (t.kind == TokenKind::String || t.kind == TokenKind::Char || t.kind == TokenKind::Number) {
                ++p;
                if (p < to && is(p, ".")) {
                    RawChain chain;
                    chain.root = RawChain::Root::Unknown;
                    p = scan_chain_tail(body, chain, p, to, depth);
                    body.chains.push_back(std::move(chain));
                }
                continue;
            }
            if (t.kind == TokenKind::Punct) {
                const std::string& s = t.text;
                if (s == "?") {
                    if (!is_wildcard(p)) body.decisions.push_back(DecisionKind::Ternary);
                    ++p;
                } else if (s == "&&") {
                    body.decisions.push_back(DecisionKind::And);
                    ++p;
                } else if (s == "||") {
                    body.decisions.push_back(DecisionKind::Or);
                    ++p;
                } else if (s == "->") {
                    ++p;
                    if (is(p, "{")) {
                        const std::size_t save = pos_;
                        pos_ = p;
                        parse_block(body, depth);
                        p = pos_;
                        pos_ = save;
                    }
                } else if (s == "::") {
                    p += 2;
                } else if (s == "@") {
                    const std::size_t save = pos_;
                    pos_ = p;
                    skip_annotation();
                    p = pos_;
                    pos_ = save;
                } else if (s == "(") {
                    const std::size_t end = match(p);
                    scan_expression(body, p + 1, end - 1, depth);
                    p = end;
                    if (p < to && (is(p, ".") || is(p, "["))) {
                        RawChain chain;
                        chain.root = RawChain::Root::Unknown;
                        p = scan_chain_tail(body, chain, p, to, depth);
                        body.chains.push_back(std::move(chain));
                    }
                } else if (s == "{" || s == "[") {
                    const std::size_t end = match(p);
                    scan_expression(body, p + 1, end - 1, depth);
                    p = end;
                } else {
                    ++p;
                }
                continue;
            }

            // identifiers and keywords
            const std::string& w = t.text;
            if (w == "new") {
                p = scan_new(body, p, to, depth);
            } else if (w == "switch") {
                const std::size_t save = pos_;
                pos_ = p;
                parse_switch(body, depth);
                p = pos_;
                pos_ = save;
            } else if (w == "instanceof") {
                ++p;
                if (is(p, "final")) ++p;
                const std::size_t end = scan_type(p);
                if (end == npos) {
                    continue;
                }
                std::string type = text_of(p, end);
                body.type_uses.push_back(type);
                p = end;
                if (p < to && is_name(p)) {
                    body.locals.emplace_back(toks_[p].text, type);
                    ++p;
                }
            } else if (w == "this" || w == "super" || is_name(p)) {
                RawChain chain;
                p = scan_chain(body, chain, p, to, depth);
                body.chains.push_back(std::move(chain));
            } else if (is_primitive(w) && is(p + 1, ".") && is(p + 2, "class")) {
                p += 3;
            } else {
                ++p;
            }
        }
    }

    std::size_t scan_args(RawBody& body, std::size_t open, int depth, std::size_t& argc)
    {
        const std::size_t end = match(open);
        argc = count_args(open);
        scan_expression(body, open + 1, end - 1, depth);
        return end;
    }

    std::size_t scan_chain(RawBody& body, RawChain& chain, std::size_t p, std::size_t to, int depth)
    {
        const std::string& w = toks_[p].text;
        if (w == "this" || w == "super") {
            chain.root = w == "this" ? RawChain::Root::This : RawChain::Root::Super;
            ++p;
            if (p < to && is(p, "(")) {
                RawChain::Segment seg{RawChain::Segment::Kind::Call, "<init>", 0};
                p = scan_args(body, p, depth, seg.argc);
                chain.segments.push_back(std::move(seg));
                return p;
            }
        } else if (p + 1 < to && is(p + 1, "(")) {
            chain.root = RawChain::Root::Implicit;
            RawChain::Segment seg{RawChain::Segment::Kind::Call, w, 0};
            p = scan_args(body, p + 1, depth, seg.argc);
            chain.segments.push_back(std::move(seg));
        } else {
            chain.root = RawChain::Root::Name;
            chain.name = w;
            ++p;
            // Generic type used as a qualifier, e.g. `List<String>.class` is
            // not legal Java; any '<' here is a comparison.
        }
        return scan_chain_tail(body, chain, p, to, depth);
    }

    std::size_t scan_chain_tail(RawBody& body, RawChain& chain, std::size_t p, std::size_t to, int depth)
    {
        while (p < to) {
            if (is(p, ".")) {
                std::size_t q = p + 1;
                if (is(q, "<")) {
                    const std::size_t after = skip_type_args(q);
                    if (after == npos) break;
                    q = after;
                }
                const Token& n = tok(q);
                if (n.kind != TokenKind::Identifier) break;
                if (n.text == "this") {
                    chain.root = RawChain::Root::This;
                    chain.name.clear();
                    chain.segments.clear();
                    p = q + 1;
                    continue;
                }
                if (n.text == "class") {
                    chain.segments.push_back({RawChain::Segment::Kind::Field, "class", 0});
                    p = q + 1;
                    continue;
                }
                if (n.text == "new" || (is_keyword(n.text) && n.text != "super")) break;
                if (q + 1 < to && is(q + 1, "(")) {
                    RawChain::Segment seg{RawChain::Segment::Kind::Call, n.text, 0};
                    p = scan_args(body, q + 1, depth, seg.argc);
                    chain.segments.push_back(std::move(seg));
                } else {
                    chain.segments.push_back({RawChain::Segment::Kind::Field, n.text, 0});
                    p = q + 1;
                }
                continue;
            }
            if (is(p, "[")) {
                const std::size_t end = match(p);
                if (end == p + 2) {
                    // `Foo[].class` or `Foo[]::new`
                    p = end;
                    continue;
                }
                scan_expression(body, p + 1, end - 1, depth);
                chain.segments.push_back({RawChain::Segment::Kind::Index, "", 0});
                p = end;
                continue;
            }
            break;
        }
        return p;
    }

    std::size_t scan_new(RawBody& body, std::size_t p, std::size_t to, int depth)
    {
        ++p; // new
        while (is(p, "@")) {
            const std::size_t save = pos_;
            pos_ = p;
            skip_annotation();
            p = pos_;
            pos_ = save;
        }
        // Type without array dimensions.
        const std::size_t type_begin = p;
        const Token& first = tok(p);
        if (first.kind != TokenKind::Identifier) throw SyntaxError(first.line, "expected type after 'new'");
        ++p;
        if (!is_primitive(first.text)) {
            for (;;) {
                if (is(p, "<")) {
                    const std::size_t after = skip_type_args(p);
                    if (after == npos) throw SyntaxError(first.line, "malformed type arguments");
                    p = after;
                }
                if (is(p, ".") && is_name(p + 1)) {
                    p += 2;
                    continue;
                }
                break;
            }
        }
        std::string type = text_of(type_begin, p);
        if (!is_primitive(first.text)) body.type_uses.push_back(type);

        if (is(p, "[")) {
            while (p < to && is(p, "[")) {
                const std::size_t end = match(p);
                scan_expression(body, p + 1, end - 1, depth);
                p = end;
            }
            if (p < to && is(p, "{")) {
                const std::size_t end = match(p);
                scan_expression(body, p + 1, end - 1, depth);
                p = end;
            }
            if (p < to && (is(p, ".") || is(p, "["))) {
                RawChain chain;
                chain.root = RawChain::Root::Unknown;
                p = scan_chain_tail(body, chain, p, to, depth);
                body.chains.push_back(std::move(chain));
            }
            return p;
        }
        if (!is(p, "(")) throw SyntaxError(tok(p).line, "expected '(' or '[' after 'new' type");

        RawChain chain;
        chain.root = RawChain::Root::New;
        chain.name = type;
        p = scan_args(body, p, depth, chain.new_argc);
        if (p < to && is(p, "{")) {
            const std::size_t save = pos_;
            pos_ = p;
            register_lambda_params(body, p, match(p));
            parse_folded_class_body(body, depth);
            p = pos_;
            pos_ = save;
        }
        p = scan_chain_tail(body, chain, p, to, depth);
        body.chains.push_back(std::move(chain));
        return p;
    }
};

} // namespace

RawFile parse_compilation_unit(std::string path, std::string_view source)
{
    Parser parser(std::move(path), source);
    return parser.parse();
}

} // namespace smellvuln::java
