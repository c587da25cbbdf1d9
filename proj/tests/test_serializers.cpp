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
#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "lodforge/errors.hpp"
#include "lodforge/ntriples.hpp"
#include "lodforge/rdfxml.hpp"
#include "lodforge/turtle.hpp"
#include "lodforge/vocab.hpp"
#include "support.hpp"

using namespace lodforge;
using rdf::Graph;
using rdf::Term;

TEST_CASE("empty graph serializes to the prefix block only") {
    Graph g;
    g.prefixes()["bf"] = vocab::bf;
    std::string ttl = rdf::serialize_turtle(g);
    CHECK(ttl == "@prefix bf: <http://id.loc.gov/ontologies/bibframe/> .\n");
    Graph back = rdf::parse_turtle(ttl);
    CHECK(back.empty());
    CHECK(back.prefixes().at("bf") == vocab::bf);
}

TEST_CASE("turtle parse errors carry line and column") {
    try {
        rdf::parse_turtle("@prefix bf: <http://x.org/> .\n<http://x.org/a> bf:p ;;; .");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 0);
    }
}

TEST_CASE("the dataset description example round-trips losslessly") {
    Graph g = rdf::parse_turtle(testsupport::read_fixture("listing3_void.ttl"));
    CHECK(g.size() == 18);

    Term dataset = Term::iri("https://example.org/MovingImageArchive");
    CHECK(g.contains({dataset, Term::iri(vocab::void_ns + "triples"),
                      Term::literal("263476", vocab::xsd_integer)}));
    CHECK(g.contains({dataset, Term::iri(vocab::void_ns + "classes"),
                      Term::literal("7", vocab::xsd_integer)}));
    CHECK(g.contains({dataset, Term::iri(vocab::void_ns + "properties"),
                      Term::literal("23", vocab::xsd_integer)}));
    CHECK(g.contains({dataset, Term::iri(vocab::void_ns + "exampleResource"),
                      Term::iri("https://example.org/film/0001")}));
    CHECK(g.contains({dataset, Term::iri(vocab::dcterms + "modified"),
                      Term::literal("2022-11-09", vocab::xsd_date)}));

    Graph back = rdf::parse_turtle(rdf::serialize_turtle(g));
    CHECK(rdf::to_ntriples_sorted(back) == rdf::to_ntriples_sorted(g));
}

TEST_CASE("turtle round-trip is isomorphic on random graphs") {
    std::mt19937 rng(1234);
    for (int i = 0; i < 50; ++i) {
        Graph g = testsupport::random_graph(rng, 200, /*with_bnodes=*/true);
        Graph back = rdf::parse_turtle(rdf::serialize_turtle(g));
        REQUIRE(rdf::isomorphic(g, back));
    }
}

TEST_CASE("empty graph serializes to a bare RDF/XML root") {
    Graph g;
    std::string xml = rdf::serialize_rdfxml(g);
    CHECK(xml.find("<rdf:RDF") != std::string::npos);
    Graph back = rdf::parse_rdfxml(xml);
    CHECK(back.empty());
}

TEST_CASE("single triple round-trips through RDF/XML") {
    Graph g;
    g.prefixes() = vocab::default_prefixes();
    g.insert(Term::iri("http://example.org/1#Work"), Term::iri(vocab::rdfs_label),
             Term::literal("Treasure island"));
    Graph back = rdf::parse_rdfxml(rdf::serialize_rdfxml(g));
    CHECK(rdf::to_ntriples_sorted(back) == rdf::to_ntriples_sorted(g));
}

TEST_CASE("RDF/XML round-trip is isomorphic on random graphs") {
    std::mt19937 rng(99);
    for (int i = 0; i < 50; ++i) {
        Graph g = testsupport::random_graph(rng, 200, /*with_bnodes=*/true);
        Graph back = rdf::parse_rdfxml(rdf::serialize_rdfxml(g));
        REQUIRE(rdf::isomorphic(g, back));
    }
}

TEST_CASE("transformed fixture round-trips through both serializers") {
    Graph g = testsupport::transform_marc_fixture("nbs_sample.xml");
    Graph via_turtle = rdf::parse_turtle(rdf::serialize_turtle(g));
    CHECK(rdf::to_ntriples_canonical(via_turtle) == rdf::to_ntriples_canonical(g));
    Graph via_xml = rdf::parse_rdfxml(rdf::serialize_rdfxml(g));
    CHECK(rdf::to_ntriples_canonical(via_xml) == rdf::to_ntriples_canonical(g));
}

TEST_CASE("language-tagged and typed literals survive the trip") {
    Graph g;
    g.insert(Term::iri("http://example.org/s"), Term::iri(vocab::rdfs_label),
             Term::lang_literal("ceòl", "gd"));
    g.insert(Term::iri("http://example.org/s"), Term::iri(vocab::dcterms + "modified"),
             Term::literal("2022-11-09", vocab::xsd_date));
    g.insert(Term::iri("http://example.org/s"), Term::iri(vocab::void_ns + "triples"),
             Term::literal("42", vocab::xsd_integer));
    g.insert(Term::iri("http://example.org/s"), Term::iri(vocab::rdfs + "comment"),
             Term::literal("escape \"this\"\nand\tthat \\ fin"));
    for (const Graph& back : {rdf::parse_turtle(rdf::serialize_turtle(g)),
                              rdf::parse_rdfxml(rdf::serialize_rdfxml(g))}) {
        CHECK(rdf::to_ntriples_sorted(back) == rdf::to_ntriples_sorted(g));
    }
}
