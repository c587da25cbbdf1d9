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
#include "lodforge/query.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lodforge/errors.hpp"
#include "lodforge/strings.hpp"
#include "lodforge/vocab.hpp"

namespace lodforge::rdf {

namespace {

using Binding = std::map<std::string, Term>;

void collect_pattern_vars(const Query& query, std::set<std::string>& vars) {
    for (const auto& p : query.patterns) {
        for (const PatternTerm* pt : {&p.subject, &p.predicate, &p.object}) {
            if (!pt->bound()) vars.insert(pt->variable);
        }
    }
}

bool filter_passes(const Filter& filter, const Binding& binding) {
    auto it = binding.find(filter.variable);
    if (it == binding.end()) return false;
    const Term& term = it->second;
    if (filter.kind == Filter::Kind::Equals) return term == filter.equals_term;
    if (!filter.str_wrapped && !term.is_literal()) return false;
    std::regex re(filter.regex);
    return std::regex_search(string_form(term), re);
}

// canonical row order: column-wise N-Triples form comparison
std::string row_key(const std::vector<std::optional<Term>>& row) {
    std::string key;
    for (const auto& cell : row) {
        key += cell ? to_ntriples(*cell) : std::string("~");
        key += '\x1f';
    }
    return key;
}

bool numeric_literal(const Term& term, double& out) {
    if (!term.is_literal()) return false;
    if (term.datatype != vocab::xsd_integer && term.datatype != vocab::xsd + "decimal"
        && term.datatype != vocab::xsd + "double") {
        return false;
    }
    try {
        out = std::stod(term.value);
        return true;
    } catch (...) {
        return false;
    }
}

int compare_terms(const std::optional<Term>& a, const std::optional<Term>& b) {
    if (!a && !b) return 0;
    if (!a) return -1;
    if (!b) return 1;
    double x = 0, y = 0;
    if (numeric_literal(*a, x) && numeric_literal(*b, y)) {
        if (x < y) return -1;
        if (x > y) return 1;
        return 0;
    }
    std::string ka = to_ntriples(*a), kb = to_ntriples(*b);
    if (ka < kb) return -1;
    if (ka > kb) return 1;
    return 0;
}

}  // namespace

void validate(const Query& query) {
    if (query.patterns.empty()) throw QueryError("query requires at least one triple pattern");
    std::set<std::string> pattern_vars;
    collect_pattern_vars(query, pattern_vars);

    auto require = [&](const std::string& var, const char* where) {
        if (!pattern_vars.count(var)) {
            throw QueryError(std::string("variable ?") + var + " in " + where
                             + " is bound by no pattern");
        }
    };
    for (const auto& v : query.projection) require(v, "SELECT");
    for (const auto& f : query.filters) require(f.variable, "FILTER");
    for (const auto& v : query.group_by) require(v, "GROUP BY");
    if (query.aggregate && !query.aggregate->variable.empty()) {
        require(query.aggregate->variable, "COUNT");
    }
    if (query.aggregate) {
        if (query.aggregate->alias.empty()) throw QueryError("COUNT requires an AS alias");
        // non-grouped plain projection with an aggregate only makes sense
        // when every projected variable is grouped
        for (const auto& v : query.projection) {
            if (std::find(query.group_by.begin(), query.group_by.end(), v) == query.group_by.end()) {
                throw QueryError("variable ?" + v + " must appear in GROUP BY to be projected "
                                 "alongside COUNT");
            }
        }
    }
    if (query.having_greater) {
        if (!query.aggregate) throw QueryError("HAVING requires a COUNT aggregate");
        if (query.having_greater->first != query.aggregate->alias) {
            throw QueryError("HAVING must reference the COUNT alias ?" + query.aggregate->alias);
        }
    }
    for (const auto& key : query.order_by) {
        bool is_alias = query.aggregate && key.variable == query.aggregate->alias;
        if (!is_alias) require(key.variable, "ORDER BY");
    }
}

ResultTable match(const Graph& graph, const Query& query) {
    validate(query);

    // join patterns left to right, extending bindings
    std::vector<Binding> bindings{Binding{}};
    for (const auto& pattern : query.patterns) {
        std::vector<Binding> extended;
        for (const auto& binding : bindings) {
            auto resolve = [&](const PatternTerm& pt) -> std::optional<Term> {
                if (pt.bound()) return pt.term;
                auto it = binding.find(pt.variable);
                if (it != binding.end()) return it->second;
                return std::nullopt;
            };
            std::optional<Term> s = resolve(pattern.subject);
            std::optional<Term> p = resolve(pattern.predicate);
            std::optional<Term> o = resolve(pattern.object);
            graph.scan(s, p, o, [&](const Triple& t) {
                Binding next = binding;
                if (!pattern.subject.bound() && !binding.count(pattern.subject.variable)) {
                    next[pattern.subject.variable] = t.subject;
                }
                if (!pattern.predicate.bound() && !binding.count(pattern.predicate.variable)) {
                    // a repeated variable within one pattern must agree
                    auto it = next.find(pattern.predicate.variable);
                    if (it != next.end() && !(it->second == t.predicate)) return;
                    next[pattern.predicate.variable] = t.predicate;
                }
                if (!pattern.object.bound() && !binding.count(pattern.object.variable)) {
                    auto it = next.find(pattern.object.variable);
                    if (it != next.end() && !(it->second == t.object)) return;
                    next[pattern.object.variable] = t.object;
                }
                // verify positions whose variable was already bound
                auto consistent = [&](const PatternTerm& pt, const Term& actual) {
                    if (pt.bound()) return true;
                    return next.at(pt.variable) == actual;
                };
                if (!consistent(pattern.subject, t.subject)
                    || !consistent(pattern.predicate, t.predicate)
                    || !consistent(pattern.object, t.object)) {
                    return;
                }
                extended.push_back(std::move(next));
            });
        }
        bindings = std::move(extended);
        if (bindings.empty()) break;
    }

    // filters
    std::vector<Binding> filtered;
    filtered.reserve(bindings.size());
    for (const auto& binding : bindings) {
        bool ok = true;
        for (const auto& filter : query.filters) {
            if (!filter_passes(filter, binding)) {
                ok = false;
                break;
            }
        }
        if (ok) filtered.push_back(binding);
    }

    ResultTable table;
    if (query.aggregate) {
        // group key -> (representative group terms, counted values)
        std::map<std::string, std::pair<std::vector<std::optional<Term>>, std::vector<Term>>> groups;
        for (const auto& binding : filtered) {
            std::vector<std::optional<Term>> key_terms;
            std::string key;
            for (const auto& var : query.group_by) {
                auto it = binding.find(var);
                std::optional<Term> t =
                    it == binding.end() ? std::nullopt : std::make_optional(it->second);
                key_terms.push_back(t);
                key += t ? to_ntriples(*t) : std::string("~");
                key += '\x1f';
            }
            auto& slot = groups[key];
            slot.first = key_terms;
            if (query.aggregate->variable.empty()) {
                slot.second.push_back(Term::literal("*"));
            } else {
                auto it = binding.find(query.aggregate->variable);
                if (it != binding.end()) slot.second.push_back(it->second);
            }
        }
        if (query.group_by.empty() && groups.empty()) {
            groups[""] = {{}, {}};  // COUNT over no rows is 0
        }

        std::vector<std::string> project_vars =
            query.projection.empty() ? query.group_by : query.projection;
        table.columns = project_vars;
        table.columns.push_back(query.aggregate->alias);

        for (auto& [key, slot] : groups) {
            long long count;
            if (query.aggregate->distinct && !query.aggregate->variable.empty()) {
                std::set<Term> distinct(slot.second.begin(), slot.second.end());
                count = static_cast<long long>(distinct.size());
            } else {
                count = static_cast<long long>(slot.second.size());
            }
            if (query.having_greater && query.having_greater->first == query.aggregate->alias
                && !(count > query.having_greater->second)) {
                continue;
            }
            std::vector<std::optional<Term>> row;
            // group terms are keyed by group_by order; re-map to projection order
            std::map<std::string, std::optional<Term>> by_var;
            for (size_t i = 0; i < query.group_by.size(); ++i) {
                by_var[query.group_by[i]] = slot.first[i];
            }
            for (const auto& var : project_vars) row.push_back(by_var[var]);
            row.push_back(Term::literal(std::to_string(count), vocab::xsd_integer));
            table.rows.push_back(std::move(row));
        }
    } else {
        table.columns = query.projection;
        std::set<std::string> seen;
        for (const auto& binding : filtered) {
            std::vector<std::optional<Term>> row;
            for (const auto& var : query.projection) {
                auto it = binding.find(var);
                row.push_back(it == binding.end() ? std::nullopt : std::make_optional(it->second));
            }
            if (query.distinct) {
                if (!seen.insert(row_key(row)).second) continue;
            }
            table.rows.push_back(std::move(row));
        }
    }

    // ordering: ORDER BY keys then canonical tie-break
    auto column_index = [&](const std::string& name) -> int {
        for (size_t i = 0; i < table.columns.size(); ++i) {
            if (table.columns[i] == name) return static_cast<int>(i);
        }
        return -1;
    };
    std::vector<std::pair<int, bool>> order_columns;
    for (const auto& key : query.order_by) {
        int idx = column_index(key.variable);
        if (idx < 0) throw QueryError("ORDER BY variable ?" + key.variable + " is not projected");
        order_columns.emplace_back(idx, key.descending);
    }
    std::sort(table.rows.begin(), table.rows.end(), [&](const auto& a, const auto& b) {
        for (const auto& [idx, desc] : order_columns) {
            int c = compare_terms(a[static_cast<size_t>(idx)], b[static_cast<size_t>(idx)]);
            if (c != 0) return desc ? c > 0 : c < 0;
        }
        return row_key(a) < row_key(b);
    });

    if (query.limit && table.rows.size() > static_cast<size_t>(*query.limit)) {
        table.rows.resize(static_cast<size_t>(*query.limit));
    }
    return table;
}

namespace {

class QueryParser {
public:
    explicit QueryParser(const std::string& text) : text_(text) {}

    Query run() {
        skip_ws();
        while (keyword_ahead("PREFIX")) parse_prefix();
        parse_select();
        parse_where();
        skip_ws();
        while (!eof()) {
            if (keyword_ahead("GROUP")) {
                parse_group_by();
            } else if (keyword_ahead("HAVING")) {
                parse_having();
            } else if (keyword_ahead("ORDER")) {
                parse_order_by();
            } else if (keyword_ahead("LIMIT")) {
                parse_limit();
            } else {
                fail("unsupported construct at \"" + rest_snippet() + "\"");
            }
            skip_ws();
        }
        return query_;
    }

private:
    [[noreturn]] void fail(const std::string& message) { throw QueryError(message); }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    bool keyword_ahead(const std::string& keyword) {
        skip_ws();
        if (pos_ + keyword.size() > text_.size()) return false;
        for (size_t i = 0; i < keyword.size(); ++i) {
            if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != keyword[i]) return false;
        }
        size_t after = pos_ + keyword.size();
        if (after < text_.size() && std::isalnum(static_cast<unsigned char>(text_[after]))) {
            return false;
        }
        return true;
    }

    void take_keyword(const std::string& keyword) {
        if (!keyword_ahead(keyword)) fail("expected " + keyword);
        pos_ += keyword.size();
    }

    std::string rest_snippet() {
        skip_ws();
        return text_.substr(pos_, std::min<size_t>(24, text_.size() - pos_));
    }

    char peek() { return text_[pos_]; }

    bool take(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!take(c)) fail(std::string("expected '") + c + "' at \"" + rest_snippet() + "\"");
    }

    std::string parse_variable() {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '?') fail("expected variable");
        ++pos_;
        std::string name;
        while (pos_ < text_.size()
               && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            name.push_back(text_[pos_++]);
        }
        if (name.empty()) fail("empty variable name");
        return name;
    }

    void parse_prefix() {
        take_keyword("PREFIX");
        skip_ws();
        std::string name;
        while (pos_ < text_.size() && text_[pos_] != ':') name.push_back(text_[pos_++]);
        expect(':');
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '<') fail("expected namespace IRI after PREFIX");
        ++pos_;
        std::string iri;
        while (pos_ < text_.size() && text_[pos_] != '>') iri.push_back(text_[pos_++]);
        expect('>');
        prefixes_[strings::trim(name)] = iri;
    }

    void parse_select() {
        take_keyword("SELECT");
        if (keyword_ahead("DISTINCT")) {
            take_keyword("DISTINCT");
            query_.distinct = true;
        }
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) fail("unexpected end of query in SELECT");
            if (text_[pos_] == '?') {
                query_.projection.push_back(parse_variable());
                continue;
            }
            if (text_[pos_] == '(') {
                parse_aggregate();
                continue;
            }
            if (keyword_ahead("WHERE") || text_[pos_] == '{') break;
            fail("unsupported SELECT expression at \"" + rest_snippet() + "\"");
        }
    }

    void parse_aggregate() {
        expect('(');
        take_keyword("COUNT");
        expect('(');
        Aggregate agg;
        if (keyword_ahead("DISTINCT")) {
            take_keyword("DISTINCT");
            agg.distinct = true;
        }
        skip_ws();
        if (text_[pos_] == '*') {
            ++pos_;
        } else {
            agg.variable = parse_variable();
        }
        expect(')');
        take_keyword("AS");
        agg.alias = parse_variable();
        expect(')');
        if (query_.aggregate) fail("only one COUNT aggregate is supported");
        query_.aggregate = agg;
    }

    void parse_where() {
        if (keyword_ahead("WHERE")) take_keyword("WHERE");
        expect('{');
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) fail("unterminated WHERE block");
            if (text_[pos_] == '}') {
                ++pos_;
                break;
            }
            if (keyword_ahead("FILTER")) {
                parse_filter();
                take('.');
                continue;
            }
            if (keyword_ahead("OPTIONAL") || keyword_ahead("UNION") || keyword_ahead("SERVICE")
                || keyword_ahead("VALUES") || keyword_ahead("MINUS") || keyword_ahead("BIND")) {
                fail("unsupported construct in WHERE: " + rest_snippet());
            }
            TriplePattern pattern;
            pattern.subject = parse_pattern_term();
            pattern.predicate = parse_pattern_term();
            pattern.object = parse_pattern_term();
            query_.patterns.push_back(std::move(pattern));
            take('.');
        }
    }

    PatternTerm parse_pattern_term() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of query in pattern");
        char c = text_[pos_];
        if (c == '?') return PatternTerm::var(parse_variable());
        if (c == '<') {
            ++pos_;
            std::string iri;
            while (pos_ < text_.size() && text_[pos_] != '>') iri.push_back(text_[pos_++]);
            expect('>');
            return PatternTerm::bound_term(Term::iri(iri));
        }
        if (c == '"') {
            return PatternTerm::bound_term(parse_literal());
        }
        if (c == 'a'
            && (pos_ + 1 >= text_.size()
                || std::isspace(static_cast<unsigned char>(text_[pos_ + 1])))) {
            ++pos_;
            return PatternTerm::bound_term(Term::iri(vocab::rdf_type));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits.push_back(text_[pos_++]);
            }
            return PatternTerm::bound_term(Term::literal(digits, vocab::xsd_integer));
        }
        // prefixed name
        std::string pname;
        while (pos_ < text_.size()
               && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ':'
                   || text_[pos_] == '_' || text_[pos_] == '-' || text_[pos_] == '.')) {
            pname.push_back(text_[pos_++]);
        }
        while (!pname.empty() && pname.back() == '.') {
            pname.pop_back();
            --pos_;
        }
        size_t colon = pname.find(':');
        if (pname.empty() || colon == std::string::npos) {
            fail("expected term at \"" + rest_snippet() + "\"");
        }
        std::string prefix = pname.substr(0, colon);
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end()) fail("undeclared prefix \"" + prefix + ":\"");
        return PatternTerm::bound_term(Term::iri(it->second + pname.substr(colon + 1)));
    }

    Term parse_literal() {
        expect('"');
        std::string value;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) {
                ++pos_;
                char e = text_[pos_++];
                switch (e) {
                    case 'n': value.push_back('\n'); break;
                    case 't': value.push_back('\t'); break;
                    default: value.push_back(e);
                }
                continue;
            }
            value.push_back(text_[pos_++]);
        }
        expect('"');
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '@') {
            ++pos_;
            std::string lang;
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
                lang.push_back(text_[pos_++]);
            }
            return Term::lang_literal(value, lang);
        }
        if (pos_ + 1 < text_.size() && text_[pos_] == '^' && text_[pos_ + 1] == '^') {
            pos_ += 2;
            PatternTerm dt = parse_pattern_term();
            return Term::literal(value, dt.term->value);
        }
        return Term::literal(value);
    }

    void parse_filter() {
        take_keyword("FILTER");
        skip_ws();
        bool wrapped_parens = take('(');
        skip_ws();
        if (keyword_ahead("REGEX")) {
            take_keyword("REGEX");
            expect('(');
            Filter filter;
            filter.kind = Filter::Kind::Regex;
            skip_ws();
            if (keyword_ahead("STR")) {
                take_keyword("STR");
                expect('(');
                filter.variable = parse_variable();
                expect(')');
                filter.str_wrapped = true;
            } else {
                filter.variable = parse_variable();
            }
            expect(',');
            skip_ws();
            Term pattern = parse_literal();
            filter.regex = pattern.value;
            skip_ws();
            if (take(',')) {
                // regex flags are not supported
                fail("regex flags are not supported");
            }
            expect(')');
            query_.filters.push_back(std::move(filter));
        } else {
            // equality: ?var = term
            Filter filter;
            filter.kind = Filter::Kind::Equals;
            filter.variable = parse_variable();
            skip_ws();
            expect('=');
            PatternTerm rhs = parse_pattern_term();
            if (!rhs.bound()) fail("FILTER equality requires a constant right-hand side");
            filter.equals_term = *rhs.term;
            query_.filters.push_back(std::move(filter));
        }
        if (wrapped_parens) expect(')');
    }

    void parse_group_by() {
        take_keyword("GROUP");
        take_keyword("BY");
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '?') {
                query_.group_by.push_back(parse_variable());
            } else {
                break;
            }
        }
        if (query_.group_by.empty()) fail("GROUP BY requires at least one variable");
    }

    void parse_having() {
        take_keyword("HAVING");
        expect('(');
        std::string alias = parse_variable();
        skip_ws();
        expect('>');
        skip_ws();
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits.push_back(text_[pos_++]);
        }
        if (digits.empty()) fail("HAVING threshold must be an integer");
        expect(')');
        query_.having_greater = {alias, std::stoll(digits)};
    }

    void parse_order_by() {
        take_keyword("ORDER");
        take_keyword("BY");
        while (true) {
            skip_ws();
            if (keyword_ahead("DESC") || keyword_ahead("ASC")) {
                bool desc = keyword_ahead("DESC");
                take_keyword(desc ? "DESC" : "ASC");
                expect('(');
                std::string var = parse_variable();
                expect(')');
                query_.order_by.push_back({var, desc});
                continue;
            }
            if (pos_ < text_.size() && text_[pos_] == '?') {
                query_.order_by.push_back({parse_variable(), false});
                continue;
            }
            break;
        }
        if (query_.order_by.empty()) fail("ORDER BY requires at least one key");
    }

    void parse_limit() {
        take_keyword("LIMIT");
        skip_ws();
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits.push_back(text_[pos_++]);
        }
        if (digits.empty()) fail("LIMIT requires an integer");
        query_.limit = std::stoll(digits);
    }

    const std::string& text_;
    size_t pos_ = 0;
    Query query_;
    std::map<std::string, std::string> prefixes_;
};

}  // namespace

Query parse_query(const std::string& text) { return QueryParser(text).run(); }

std::string to_text(const ResultTable& table) {
    std::ostringstream out;
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i > 0) out << "\t";
        out << "?" << table.columns[i];
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << "\t";
            out << (row[i] ? to_ntriples(*row[i]) : "");
        }
        out << "\n";
    }
    return out.str();
}

std::string to_json(const ResultTable& table) {
    nlohmann::ordered_json doc;
    doc["columns"] = table.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        for (const auto& cell : row) {
            if (!cell) {
                cells.push_back(nullptr);
                continue;
            }
            nlohmann::ordered_json c;
            switch (cell->kind) {
                case Term::Kind::Iri: c["type"] = "iri"; break;
                case Term::Kind::BlankNode: c["type"] = "bnode"; break;
                case Term::Kind::Literal: c["type"] = "literal"; break;
            }
            c["value"] = cell->value;
            if (!cell->datatype.empty()) c["datatype"] = cell->datatype;
            if (!cell->lang.empty()) c["lang"] = cell->lang;
            cells.push_back(std::move(c));
        }
        rows.push_back(std::move(cells));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

}  // namespace lodforge::rdf
