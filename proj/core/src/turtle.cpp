/**
Copyright 2026 The lodforge authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
 */
#include "lodforge/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <vector>

#include "lodforge/errors.hpp"
#include "lodforge/strings.hpp"
#include "lodforge/vocab.hpp"

namespace lodforge::rdf {

namespace {

bool valid_pn_local(const std::string& s) {
    if (s.empty()) return false;
    auto ok_first = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    auto ok_rest = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
    };
    if (!ok_first(s.front()) || s.back() == '.') return false;
    for (char c : s) {
        if (!ok_rest(c)) return false;
    }
    return true;
}

std::string escape_literal(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

class Writer {
public:
    explicit Writer(const Graph& graph) : graph_(graph) {}

    std::string run() {
        std::string out;
        if (graph_.base()) out += "@base <" + *graph_.base() + "> .\n";
        for (const auto& [prefix, iri] : graph_.prefixes()) {
            out += "@prefix " + prefix + ": <" + iri + "> .\n";
        }
        if (graph_.empty()) return out;
        out += "\n";

        // group triples by subject, preserving set order
        const Term* current = nullptr;
        std::vector<const Triple*> group;
        for (const auto& t : graph_.triples()) {
            if (current != nullptr && !(t.subject == *current)) {
                emit_subject(out, group);
                group.clear();
            }
            current = &t.subject;
            group.push_back(&t);
        }
        if (!group.empty()) emit_subject(out, group);
        return out;
    }

private:
    void emit_subject(std::string& out, const std::vector<const Triple*>& group) {
        // rdf:type first, then predicate order; objects in term order
        std::vector<const Triple*> sorted = group;
        std::stable_sort(sorted.begin(), sorted.end(), [](const Triple* a, const Triple* b) {
            bool ta = a->predicate.value == vocab::rdf_type;
            bool tb = b->predicate.value == vocab::rdf_type;
            if (ta != tb) return ta;
            if (a->predicate != b->predicate) return a->predicate < b->predicate;
            return a->object < b->object;
        });
        out += render(sorted.front()->subject);
        const Term* last_predicate = nullptr;
        for (const Triple* t : sorted) {
            if (last_predicate != nullptr && t->predicate == *last_predicate) {
                out += ", " + render(t->object);
                continue;
            }
            if (last_predicate != nullptr) out += " ;";
            out += "\n    " + render_predicate(t->predicate) + " " + render(t->object);
            last_predicate = &t->predicate;
        }
        out += " .\n\n";
    }

    std::string render_predicate(const Term& term) {
        if (term.value == vocab::rdf_type) return "a";
        return render(term);
    }

    std::string render(const Term& term) {
        switch (term.kind) {
            case Term::Kind::BlankNode:
                return "_:" + term.value;
            case Term::Kind::Iri: {
                for (const auto& [prefix, ns] : graph_.prefixes()) {
                    if (strings::starts_with(term.value, ns)) {
                        std::string local = term.value.substr(ns.size());
                        if (valid_pn_local(local)) return prefix + ":" + local;
                    }
                }
                return "<" + term.value + ">";
            }
            case Term::Kind::Literal: {
                if (term.datatype == vocab::xsd_integer && strings::is_integer(term.value)) {
                    return term.value;
                }
                std::string out = "\"" + escape_literal(term.value) + "\"";
                if (!term.lang.empty()) {
                    out += "@" + term.lang;
                } else if (!term.datatype.empty() && term.datatype != vocab::xsd_string) {
                    out += "^^" + render(Term::iri(term.datatype));
                }
                return out;
            }
        }
        return {};
    }

    const Graph& graph_;
};

struct Token {
    enum class Type {
        Iri,          // <...>
        PrefixedName, // pn:local (value holds the raw text)
        BlankNode,    // _:label
        String,       // "..." (value is unescaped)
        LangTag,      // @tag
        DatatypeMark, // ^^
        Integer,
        Decimal,
        A,            // keyword 'a'
        PrefixDirective,
        BaseDirective,
        Dot,
        Semicolon,
        Comma,
        End,
    };
    Type type;
    std::string value;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_ws_and_comments();
        int line = line_, column = column_;
        if (eof()) return {Token::Type::End, "", line, column};
        char c = peek();
        if (c == '<') return read_iri();
        if (c == '"') return read_string();
        if (c == '^') {
            advance();
            if (!eof() && peek() == '^') {
                advance();
                return {Token::Type::DatatypeMark, "^^", line, column};
            }
            fail("expected ^^");
        }
        if (c == '@') return read_at(line, column);
        if (c == '.') {
            advance();
            return {Token::Type::Dot, ".", line, column};
        }
        if (c == ';') {
            advance();
            return {Token::Type::Semicolon, ";", line, column};
        }
        if (c == ',') {
            advance();
            return {Token::Type::Comma, ",", line, column};
        }
        if (c == '_' && pos_ + 1 < text_.size() && text_[pos_ + 1] == ':') return read_bnode();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') return read_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == ':') return read_name(line, column);
        fail(std::string("unexpected character '") + c + "'");
        return {};
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("Turtle syntax error: " + message, static_cast<long long>(pos_), line_,
                         column_);
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_ws_and_comments() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    Token read_iri() {
        int line = line_, column = column_;
        advance();  // <
        std::string value;
        while (!eof() && peek() != '>') {
            if (peek() == '\n') fail("newline inside IRI");
            value.push_back(peek());
            advance();
        }
        if (eof()) fail("unterminated IRI");
        advance();  // >
        return {Token::Type::Iri, value, line, column};
    }

    Token read_string() {
        int line = line_, column = column_;
        advance();  // "
        std::string value;
        while (true) {
            if (eof()) fail("unterminated string literal");
            char c = peek();
            if (c == '"') {
                advance();
                break;
            }
            if (c == '\\') {
                advance();
                if (eof()) fail("dangling escape");
                char e = peek();
                advance();
                switch (e) {
                    case 'n': value.push_back('\n'); break;
                    case 'r': value.push_back('\r'); break;
                    case 't': value.push_back('\t'); break;
                    case '"': value.push_back('"'); break;
                    case '\\': value.push_back('\\'); break;
                    case 'u':
                    case 'U': {
                        int len = (e == 'u') ? 4 : 8;
                        unsigned long cp = 0;
                        for (int i = 0; i < len; ++i) {
                            if (eof() || !std::isxdigit(static_cast<unsigned char>(peek()))) {
                                fail("bad unicode escape");
                            }
                            cp = cp * 16
                                 + static_cast<unsigned long>(
                                     std::isdigit(static_cast<unsigned char>(peek()))
                                         ? peek() - '0'
                                         : std::tolower(static_cast<unsigned char>(peek())) - 'a' + 10);
                            advance();
                        }
                        // encode codepoint as UTF-8
                        if (cp < 0x80) {
                            value.push_back(static_cast<char>(cp));
                        } else if (cp < 0x800) {
                            value.push_back(static_cast<char>(0xC0 | (cp >> 6)));
                            value.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
                        } else if (cp < 0x10000) {
                            value.push_back(static_cast<char>(0xE0 | (cp >> 12)));
                            value.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
                            value.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
                        } else {
                            value.push_back(static_cast<char>(0xF0 | (cp >> 18)));
                            value.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
                            value.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
                            value.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
                        }
                        break;
                    }
                    default:
                        fail(std::string("unknown escape \\") + e);
                }
                continue;
            }
            value.push_back(c);
            advance();
        }
        return {Token::Type::String, value, line, column};
    }

    Token read_at(int line, int column) {
        advance();  // @
        std::string word;
        while (!eof()
               && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
            word.push_back(peek());
            advance();
        }
        if (word == "prefix") return {Token::Type::PrefixDirective, word, line, column};
        if (word == "base") return {Token::Type::BaseDirective, word, line, column};
        return {Token::Type::LangTag, word, line, column};
    }

    Token read_bnode() {
        int line = line_, column = column_;
        advance();  // _
        advance();  // :
        std::string label;
        while (!eof()
               && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'
                   || peek() == '-' || peek() == '.')) {
            label.push_back(peek());
            advance();
        }
        while (!label.empty() && label.back() == '.') {
            label.pop_back();
            --pos_;
            --column_;
        }
        if (label.empty()) fail("empty blank node label");
        return {Token::Type::BlankNode, label, line, column};
    }

    Token read_number() {
        int line = line_, column = column_;
        std::string value;
        if (peek() == '+' || peek() == '-') {
            value.push_back(peek());
            advance();
        }
        bool decimal = false;
        while (!eof()
               && (std::isdigit(static_cast<unsigned char>(peek()))
                   || (peek() == '.' && pos_ + 1 < text_.size()
                       && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))))) {
            if (peek() == '.') decimal = true;
            value.push_back(peek());
            advance();
        }
        if (value.empty() || (value.size() == 1 && (value[0] == '+' || value[0] == '-'))) {
            fail("malformed number");
        }
        return {decimal ? Token::Type::Decimal : Token::Type::Integer, value, line, column};
    }

    Token read_name(int line, int column) {
        std::string text;
        while (!eof()
               && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'
                   || peek() == '-' || peek() == '.' || peek() == ':')) {
            text.push_back(peek());
            advance();
        }
        // a trailing dot is the statement terminator, not part of the name
        while (!text.empty() && text.back() == '.') {
            text.pop_back();
            --pos_;
            --column_;
        }
        if (text == "a") return {Token::Type::A, text, line, column};
        if (text == "true" || text == "false") {
            return {Token::Type::String, text, line, column};  // rare; kept as plain literal
        }
        size_t colon = text.find(':');
        if (colon == std::string::npos) fail("bare word \"" + text + "\" is not valid Turtle");
        return {Token::Type::PrefixedName, text, line, column};
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { shift(); }

    Graph run() {
        while (current_.type != Token::Type::End) {
            if (current_.type == Token::Type::PrefixDirective) {
                parse_prefix();
                continue;
            }
            if (current_.type == Token::Type::BaseDirective) {
                parse_base();
                continue;
            }
            parse_statement();
        }
        return std::move(graph_);
    }

private:
    void shift() { current_ = lexer_.next(); }

    void expect(Token::Type type, const std::string& what) {
        if (current_.type != type) {
            throw ParseError("Turtle syntax error: expected " + what + " near \"" + current_.value
                                 + "\"",
                             0, current_.line, current_.column);
        }
    }

    void parse_prefix() {
        shift();
        expect(Token::Type::PrefixedName, "prefix name");
        std::string name = current_.value;
        if (name.back() != ':') {
            throw ParseError("Turtle syntax error: malformed prefix declaration", 0, current_.line,
                             current_.column);
        }
        name.pop_back();
        shift();
        expect(Token::Type::Iri, "namespace IRI");
        graph_.prefixes()[name] = current_.value;
        shift();
        expect(Token::Type::Dot, "'.'");
        shift();
    }

    void parse_base() {
        shift();
        expect(Token::Type::Iri, "base IRI");
        graph_.base() = current_.value;
        shift();
        expect(Token::Type::Dot, "'.'");
        shift();
    }

    void parse_statement() {
        Term subject = parse_term(/*as_subject=*/true);
        while (true) {
            Term predicate = parse_predicate();
            while (true) {
                Term object = parse_term(false);
                graph_.insert(subject, predicate, object);
                if (current_.type == Token::Type::Comma) {
                    shift();
                    continue;
                }
                break;
            }
            if (current_.type == Token::Type::Semicolon) {
                shift();
                // allow trailing ';' before '.'
                while (current_.type == Token::Type::Semicolon) shift();
                if (current_.type == Token::Type::Dot) break;
                continue;
            }
            break;
        }
        expect(Token::Type::Dot, "'.'");
        shift();
    }

    Term parse_predicate() {
        if (current_.type == Token::Type::A) {
            shift();
            return Term::iri(vocab::rdf_type);
        }
        Term t = parse_term(false);
        if (!t.is_iri()) {
            throw ParseError("Turtle syntax error: predicate must be an IRI", 0, current_.line,
                             current_.column);
        }
        return t;
    }

    Term parse_term(bool as_subject) {
        switch (current_.type) {
            case Token::Type::Iri: {
                Term t = Term::iri(resolve(current_.value));
                shift();
                return t;
            }
            case Token::Type::PrefixedName: {
                Term t = Term::iri(expand(current_.value));
                shift();
                return t;
            }
            case Token::Type::BlankNode: {
                Term t = Term::bnode(current_.value);
                shift();
                return t;
            }
            case Token::Type::Integer: {
                if (as_subject) break;
                Term t = Term::literal(current_.value, vocab::xsd_integer);
                shift();
                return t;
            }
            case Token::Type::Decimal: {
                if (as_subject) break;
                Term t = Term::literal(current_.value, vocab::xsd + "decimal");
                shift();
                return t;
            }
            case Token::Type::String: {
                if (as_subject) break;
                std::string lexical = current_.value;
                shift();
                if (current_.type == Token::Type::LangTag) {
                    std::string lang = current_.value;
                    shift();
                    return Term::lang_literal(lexical, lang);
                }
                if (current_.type == Token::Type::DatatypeMark) {
                    shift();
                    Term dt = parse_term(false);
                    if (!dt.is_iri()) {
                        throw ParseError("Turtle syntax error: datatype must be an IRI", 0,
                                         current_.line, current_.column);
                    }
                    return Term::literal(lexical, dt.value);
                }
                return Term::literal(lexical);
            }
            default:
                break;
        }
        throw ParseError("Turtle syntax error: unexpected token \"" + current_.value + "\"", 0,
                         current_.line, current_.column);
    }

    std::string resolve(const std::string& iri) const {
        if (strings::is_absolute_iri(iri)) return iri;
        if (graph_.base()) return *graph_.base() + iri;
        return iri;  // left as-is; Graph::insert rejects relative IRIs
    }

    std::string expand(const std::string& pname) {
        size_t colon = pname.find(':');
        std::string prefix = pname.substr(0, colon);
        std::string local = pname.substr(colon + 1);
        auto it = graph_.prefixes().find(prefix);
        if (it == graph_.prefixes().end()) {
            throw ParseError("Turtle syntax error: undeclared prefix \"" + prefix + ":\"", 0,
                             current_.line, current_.column);
        }
        return it->second + local;
    }

    Lexer lexer_;
    Token current_;
    Graph graph_;
};

}  // namespace

std::string serialize_turtle(const Graph& graph) { return Writer(graph).run(); }

Graph parse_turtle(const std::string& text) { return Parser(text).run(); }

}  // namespace lodforge::rdf
