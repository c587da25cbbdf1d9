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
#include "oracle_query.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include "lodforge/vocab.hpp"

namespace testsupport {

namespace {

using lodforge::rdf::Filter;
using lodforge::rdf::PatternTerm;
using lodforge::rdf::Query;
using lodforge::rdf::ResultTable;
using lodforge::rdf::Term;
using lodforge::rdf::Triple;
using lodforge::rdf::to_ntriples;

using Env = std::map<std::string, Term>;

// position check: bound term must equal, bound variable must agree
bool accepts(const PatternTerm& pt, const Term& actual, Env& env) {
    if (pt.bound()) return *pt.term == actual;
    auto it = env.find(pt.variable);
    if (it != env.end()) return it->second == actual;
    env.emplace(pt.variable, actual);
    return true;
}

void enumerate(const std::vector<Triple>& triples, const Query& query, size_t level, Env env,
               std::vector<Env>& out) {
    if (level == query.patterns.size()) {
        out.push_back(std::move(env));
        return;
    }
    const auto& pattern = query.patterns[level];
    for (const auto& t : triples) {
        Env candidate = env;
        if (!accepts(pattern.subject, t.subject, candidate)) continue;
        if (!accepts(pattern.predicate, t.predicate, candidate)) continue;
        if (!accepts(pattern.object, t.object, candidate)) continue;
        enumerate(triples, query, level + 1, std::move(candidate), out);
    }
}

bool passes_filters(const Query& query, const Env& env) {
    for (const auto& filter : query.filters) {
        auto it = env.find(filter.variable);
        if (it == env.end()) return false;
        if (filter.kind == Filter::Kind::Equals) {
            if (!(it->second == filter.equals_term)) return false;
            continue;
        }
        if (!filter.str_wrapped && !it->second.is_literal()) return false;
        std::regex re(filter.regex);
        if (!std::regex_search(it->second.value, re)) return false;
    }
    return true;
}

std::string cell_key(const std::optional<Term>& cell) {
    return cell ? to_ntriples(*cell) : std::string("~");
}

std::string row_sort_key(const std::vector<std::optional<Term>>& row) {
    std::string key;
    for (const auto& cell : row) {
        key += cell_key(cell);
        key += '\x1f';
    }
    return key;
}

bool numeric(const Term& t, double& out) {
    using lodforge::vocab::xsd;
    using lodforge::vocab::xsd_integer;
    if (!t.is_literal()) return false;
    if (t.datatype != xsd_integer && t.datatype != xsd + "decimal" && t.datatype != xsd + "double") {
        return false;
    }
    try {
        out = std::stod(t.value);
        return true;
    } catch (...) {
        return false;
    }
}

int compare_cells(const std::optional<Term>& a, const std::optional<Term>& b) {
    if (!a && !b) return 0;
    if (!a) return -1;
    if (!b) return 1;
    double x = 0, y = 0;
    if (numeric(*a, x) && numeric(*b, y)) return x < y ? -1 : (x > y ? 1 : 0);
    std::string ka = to_ntriples(*a), kb = to_ntriples(*b);
    return ka < kb ? -1 : (ka > kb ? 1 : 0);
}

}  // namespace

ResultTable brute_force_match(const lodforge::rdf::Graph& graph, const Query& query) {
    std::vector<Triple> triples(graph.triples().begin(), graph.triples().end());

    std::vector<Env> rows;
    enumerate(triples, query, 0, {}, rows);

    std::vector<Env> kept;
    for (auto& env : rows) {
        if (passes_filters(query, env)) kept.push_back(env);
    }

    ResultTable table;
    if (query.aggregate) {
        std::vector<std::string> project_vars =
            query.projection.empty() ? query.group_by : query.projection;
        table.columns = project_vars;
        table.columns.push_back(query.aggregate->alias);

        std::map<std::string, std::pair<std::vector<std::optional<Term>>, std::vector<Term>>> groups;
        for (const auto& env : kept) {
            std::vector<std::optional<Term>> key_terms;
            std::string key;
            for (const auto& var : query.group_by) {
                auto it = env.find(var);
                std::optional<Term> cell =
                    it == env.end() ? std::nullopt : std::make_optional(it->second);
                key_terms.push_back(cell);
                key += cell_key(cell) + '\x1f';
            }
            auto& slot = groups[key];
            slot.first = key_terms;
            if (query.aggregate->variable.empty()) {
                slot.second.push_back(Term::literal("*"));
            } else if (auto it = env.find(query.aggregate->variable); it != env.end()) {
                slot.second.push_back(it->second);
            }
        }
        if (query.group_by.empty() && groups.empty()) groups[""] = {{}, {}};

        for (auto& [key, slot] : groups) {
            long long count;
            if (query.aggregate->distinct && !query.aggregate->variable.empty()) {
                std::set<Term> distinct(slot.second.begin(), slot.second.end());
                count = static_cast<long long>(distinct.size());
            } else {
                count = static_cast<long long>(slot.second.size());
            }
            if (query.having_greater && !(count > query.having_greater->second)) continue;
            std::map<std::string, std::optional<Term>> by_var;
            for (size_t i = 0; i < query.group_by.size(); ++i) by_var[query.group_by[i]] = slot.first[i];
            std::vector<std::optional<Term>> row;
            for (const auto& var : project_vars) row.push_back(by_var[var]);
            row.push_back(Term::literal(std::to_string(count), lodforge::vocab::xsd_integer));
            table.rows.push_back(std::move(row));
        }
    } else {
        table.columns = query.projection;
        std::set<std::string> seen;
        for (const auto& env : kept) {
            std::vector<std::optional<Term>> row;
            for (const auto& var : query.projection) {
                auto it = env.find(var);
                row.push_back(it == env.end() ? std::nullopt : std::make_optional(it->second));
            }
            if (query.distinct && !seen.insert(row_sort_key(row)).second) continue;
            table.rows.push_back(std::move(row));
        }
    }

    std::vector<std::pair<int, bool>> order_columns;
    for (const auto& key : query.order_by) {
        for (size_t i = 0; i < table.columns.size(); ++i) {
            if (table.columns[i] == key.variable) {
                order_columns.emplace_back(static_cast<int>(i), key.descending);
                break;
            }
        }
    }
    std::sort(table.rows.begin(), table.rows.end(), [&](const auto& a, const auto& b) {
        for (const auto& [idx, desc] : order_columns) {
            int c = compare_cells(a[static_cast<size_t>(idx)], b[static_cast<size_t>(idx)]);
            if (c != 0) return desc ? c > 0 : c < 0;
        }
        return row_sort_key(a) < row_sort_key(b);
    });
    if (query.limit && table.rows.size() > static_cast<size_t>(*query.limit)) {
        table.rows.resize(static_cast<size_t>(*query.limit));
    }
    return table;
}

}  // namespace testsupport
