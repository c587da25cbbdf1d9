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

#include <random>
#include <string>
#include <vector>

#include "lodforge/graph.hpp"
#include "lodforge/query.hpp"
#include "lodforge/vocab.hpp"

namespace testsupport {

/// Random graph over small term pools; realistic shape (typed resources,
/// labels, links). Blank nodes optional for serializer round-trips.
inline lodforge::rdf::Graph random_graph(std::mt19937& rng, int max_triples, bool with_bnodes) {
    using lodforge::rdf::Term;
    namespace vocab = lodforge::vocab;

    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };

    std::vector<std::string> subjects;
    for (int i = 0; i < 12; ++i) subjects.push_back("http://example.org/r" + std::to_string(i));
    std::vector<std::string> predicates = {
        vocab::rdf_type,           vocab::rdfs_label,        vocab::bf + "title",
        vocab::bf + "contribution", vocab::bf + "agent",     vocab::schema + "name",
        vocab::bf + "language",     vocab::owl_sameas,
    };
    std::vector<std::string> classes = {
        vocab::bf + "Work", vocab::bf + "Person", vocab::schema + "VideoObject",
        vocab::bf + "Title"};
    std::vector<std::string> literals = {"alpha", "beta", "gamma", "delta", "1850", "colour"};
    std::vector<std::string> bnodes = {"b0", "b1", "b2", "b3"};

    lodforge::rdf::Graph g;
    g.prefixes() = vocab::default_prefixes();
    int triples = 1 + pick(max_triples);
    for (int i = 0; i < triples; ++i) {
        Term subject = (with_bnodes && pick(5) == 0) ? Term::bnode(bnodes[pick(4)])
                                                     : Term::iri(subjects[pick(12)]);
        std::string predicate = predicates[pick(static_cast<int>(predicates.size()))];
        Term object;
        if (predicate == vocab::rdf_type) {
            object = Term::iri(classes[pick(static_cast<int>(classes.size()))]);
        } else {
            switch (pick(4)) {
                case 0:
                    object = Term::literal(literals[pick(static_cast<int>(literals.size()))]);
                    break;
                case 1:
                    object = Term::lang_literal(literals[pick(static_cast<int>(literals.size()))],
                                                pick(2) == 0 ? "en" : "gd");
                    break;
                case 2:
                    object = (with_bnodes && pick(4) == 0) ? Term::bnode(bnodes[pick(4)])
                                                           : Term::iri(subjects[pick(12)]);
                    break;
                default:
                    object = Term::literal(std::to_string(pick(2000)), vocab::xsd_integer);
            }
        }
        g.insert(std::move(subject), Term::iri(predicate), std::move(object));
    }
    return g;
}

/// Random connected conjunctive query over the generator's vocabulary,
/// optionally with a filter, DISTINCT, aggregation, ordering and limit.
inline lodforge::rdf::Query random_query(std::mt19937& rng) {
    using lodforge::rdf::PatternTerm;
    using lodforge::rdf::Query;
    using lodforge::rdf::Term;
    using lodforge::rdf::TriplePattern;
    namespace vocab = lodforge::vocab;

    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
    std::vector<std::string> predicates = {
        vocab::rdf_type,           vocab::rdfs_label,        vocab::bf + "title",
        vocab::bf + "contribution", vocab::bf + "agent",     vocab::schema + "name",
    };
    std::vector<std::string> vars = {"a", "b", "c", "d"};

    Query q;
    int patterns = 1 + pick(3);
    for (int i = 0; i < patterns; ++i) {
        TriplePattern p;
        // stay connected: reuse the first variable as subject past level 0
        p.subject = (i == 0) ? PatternTerm::var(vars[0])
                             : (pick(2) == 0 ? PatternTerm::var(vars[0])
                                             : PatternTerm::var(vars[pick(2)]));
        p.predicate = PatternTerm::bound_term(
            Term::iri(predicates[pick(static_cast<int>(predicates.size()))]));
        p.object = PatternTerm::var(vars[1 + pick(3)]);
        q.patterns.push_back(std::move(p));
    }

    // project variables that definitely occur
    q.projection.push_back(vars[0]);
    if (pick(2) == 0) q.projection.push_back(q.patterns.front().object.variable);
    if (pick(3) == 0) q.distinct = true;

    if (pick(3) == 0) {
        lodforge::rdf::Filter f;
        f.kind = lodforge::rdf::Filter::Kind::Regex;
        f.variable = q.patterns.front().object.variable;
        f.regex = pick(2) == 0 ? "a" : "1";
        f.str_wrapped = pick(2) == 0;
        q.filters.push_back(std::move(f));
    }

    if (pick(4) == 0) {
        lodforge::rdf::Aggregate agg;
        agg.distinct = pick(2) == 0;
        agg.variable = q.patterns.front().object.variable;
        agg.alias = "total";
        q.group_by = {vars[0]};
        q.projection = {vars[0]};
        q.aggregate = agg;
        if (pick(2) == 0) q.having_greater = {"total", 1};
        if (pick(2) == 0) q.order_by.push_back({"total", true});
    } else if (pick(3) == 0) {
        q.order_by.push_back({vars[0], pick(2) == 0});
    }
    if (pick(3) == 0) q.limit = 1 + pick(20);
    return q;
}

}  // namespace testsupport
