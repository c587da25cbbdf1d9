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
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lodforge/graph.hpp"

namespace lodforge::rdf {

/// Pattern position: a bound term or a named variable.
struct PatternTerm {
    std::optional<Term> term;  // bound when set
    std::string variable;      // variable name (no '?') otherwise

    bool bound() const { return term.has_value(); }

    static PatternTerm bound_term(Term t) { return {std::move(t), ""}; }
    static PatternTerm var(std::string name) { return {std::nullopt, std::move(name)}; }
};

struct TriplePattern {
    PatternTerm subject;
    PatternTerm predicate;
    PatternTerm object;
};

/// FILTER on one variable: a regex over the term's string form or equality
/// with a fixed term. Without str() only literals are regex-matched; with
/// str() IRIs match over their IRI text too.
struct Filter {
    enum class Kind { Regex, Equals };
    Kind kind = Kind::Regex;
    std::string variable;
    std::string regex;     // Regex
    bool str_wrapped = false;
    Term equals_term;      // Equals
};

struct Aggregate {
    bool distinct = false;
    std::string variable;  // empty means COUNT(*)
    std::string alias;     // projected name
};

struct OrderKey {
    std::string variable;
    bool descending = false;
};

/// Conjunctive graph-pattern query: the closure of the SPARQL features the
/// exploration queries need. No OPTIONAL, UNION, or property paths.
struct Query {
    std::vector<TriplePattern> patterns;
    std::vector<Filter> filters;
    std::vector<std::string> projection;   // plain variables, in SELECT order
    std::optional<Aggregate> aggregate;    // COUNT, optionally per group
    std::vector<std::string> group_by;
    bool distinct = false;
    std::optional<std::pair<std::string, long long>> having_greater;  // alias > n
    std::vector<OrderKey> order_by;
    std::optional<long long> limit;
};

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<Term>>> rows;
};

/// Validates variable usage; throws QueryError for unbound projected,
/// filtered, or grouped variables.
void validate(const Query& query);

/// Evaluates with index-backed pattern joins. Rows come back in ORDER BY
/// order when given, canonical (sorted) order otherwise.
ResultTable match(const Graph& graph, const Query& query);

/// Parses the textual query language (PREFIX, SELECT [DISTINCT] with
/// variables and COUNT aggregates, WHERE with triple patterns and FILTERs,
/// GROUP BY, HAVING, ORDER BY, LIMIT). Unsupported constructs raise
/// QueryError naming the construct.
Query parse_query(const std::string& text);

/// Result renderers used by the CLI.
std::string to_text(const ResultTable& table);
std::string to_json(const ResultTable& table);

}  // namespace lodforge::rdf
