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
#include <benchmark/benchmark.h>

#include <random>

#include "lodforge/graph.hpp"
#include "lodforge/ntriples.hpp"
#include "lodforge/query.hpp"
#include "lodforge/turtle.hpp"
#include "lodforge/vocab.hpp"

namespace {

using namespace lodforge;
using rdf::Graph;
using rdf::Term;

Graph make_graph(int works) {
    Graph g;
    g.prefixes() = vocab::default_prefixes();
    for (int i = 0; i < works; ++i) {
        std::string id = std::to_string(9900000000000000LL + i);
        Term work = Term::iri("http://example.org/" + id + "#Work");
        Term title = Term::iri("http://example.org/" + id + "#Title245-2");
        Term contribution = Term::iri("http://example.org/" + id + "#Contribution100-3");
        Term agent = Term::iri("http://example.org/" + id + "#Agent100-3");
        g.insert(work, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "Work"));
        g.insert(work, Term::iri(vocab::bf + "title"), title);
        g.insert(title, Term::iri(vocab::bf + "mainTitle"),
                 Term::literal("Volume " + std::to_string(i)));
        g.insert(work, Term::iri(vocab::bf + "contribution"), contribution);
        g.insert(contribution, Term::iri(vocab::bf + "agent"), agent);
        g.insert(agent, Term::iri(vocab::rdfs_label),
                 Term::literal("Author, Number " + std::to_string(i % 50)));
        if (i % 3 == 0) {
            g.insert(work, Term::iri(vocab::bf + "language"),
                     Term::iri("http://id.loc.gov/vocabulary/languages/spa"));
        }
    }
    return g;
}

void BM_Insert(benchmark::State& state) {
    for (auto _ : state) {
        Graph g = make_graph(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(g.size());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * 7);
}
BENCHMARK(BM_Insert)->Arg(100)->Arg(1000)->Arg(5000);

void BM_MatchLanguageJoin(benchmark::State& state) {
    Graph g = make_graph(static_cast<int>(state.range(0)));
    rdf::Query q = rdf::parse_query(
        "PREFIX bf:<http://id.loc.gov/ontologies/bibframe/>\n"
        "SELECT distinct ?work ?title WHERE {"
        " ?work bf:language <http://id.loc.gov/vocabulary/languages/spa> ."
        " ?work bf:title ?resTitle . ?resTitle bf:mainTitle ?title }");
    for (auto _ : state) {
        auto result = rdf::match(g, q);
        benchmark::DoNotOptimize(result.rows.size());
    }
}
BENCHMARK(BM_MatchLanguageJoin)->Arg(1000)->Arg(5000)->Arg(20000);

void BM_MatchRegexFilter(benchmark::State& state) {
    Graph g = make_graph(static_cast<int>(state.range(0)));
    rdf::Query q = rdf::parse_query(
        "PREFIX bf:<http://id.loc.gov/ontologies/bibframe/>\n"
        "PREFIX rdfs:<http://www.w3.org/2000/01/rdf-schema#>\n"
        "SELECT ?label ?a WHERE { ?s bf:contribution ?c . ?c bf:agent ?a ."
        " ?a rdfs:label ?label . FILTER regex(str(?label), \"Number 7\") } LIMIT 10");
    for (auto _ : state) {
        auto result = rdf::match(g, q);
        benchmark::DoNotOptimize(result.rows.size());
    }
}
BENCHMARK(BM_MatchRegexFilter)->Arg(1000)->Arg(5000);

void BM_SerializeTurtle(benchmark::State& state) {
    Graph g = make_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        std::string ttl = rdf::serialize_turtle(g);
        benchmark::DoNotOptimize(ttl.size());
    }
}
BENCHMARK(BM_SerializeTurtle)->Arg(1000)->Arg(5000);

void BM_ParseTurtle(benchmark::State& state) {
    std::string ttl = rdf::serialize_turtle(make_graph(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        Graph g = rdf::parse_turtle(ttl);
        benchmark::DoNotOptimize(g.size());
    }
}
BENCHMARK(BM_ParseTurtle)->Arg(1000)->Arg(5000);

void BM_CanonicalNTriples(benchmark::State& state) {
    Graph g = make_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        std::string nt = rdf::to_ntriples_canonical(g);
        benchmark::DoNotOptimize(nt.size());
    }
}
BENCHMARK(BM_CanonicalNTriples)->Arg(1000)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
