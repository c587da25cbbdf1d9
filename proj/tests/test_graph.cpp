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

#include "lodforge/errors.hpp"
#include "lodforge/graph.hpp"
#include "lodforge/ntriples.hpp"
#include "lodforge/vocab.hpp"

using namespace lodforge;
using rdf::Graph;
using rdf::Term;

TEST_CASE("inserting a duplicate leaves size unchanged") {
    Graph g;
    auto t = rdf::Triple{Term::iri("http://x.org/s"), Term::iri("http://x.org/p"),
                         Term::literal("v")};
    CHECK(g.insert(t));
    CHECK_FALSE(g.insert(t));
    CHECK(g.size() == 1);
}

TEST_CASE("literals differing only by language tag are distinct") {
    Graph g;
    g.insert(Term::iri("http://x.org/s"), Term::iri("http://x.org/p"),
             Term::lang_literal("colour", "en-GB"));
    g.insert(Term::iri("http://x.org/s"), Term::iri("http://x.org/p"),
             Term::lang_literal("colour", "en-US"));
    CHECK(g.size() == 2);
}

TEST_CASE("relative IRIs are rejected") {
    Graph g;
    CHECK_THROWS_AS(
        g.insert(Term::iri("film/0001"), Term::iri("http://x.org/p"), Term::literal("v")),
        ConfigError);
    CHECK_THROWS_AS(
        g.insert(Term::iri("http://x.org/s"), Term::iri("p"), Term::iri("http://x.org/o")),
        ConfigError);
}

TEST_CASE("plain literal equals xsd:string literal") {
    CHECK(Term::literal("v") == Term::literal("v", vocab::xsd_string));
}

TEST_CASE("stats count classes and properties") {
    Graph g;
    CHECK(g.stats().class_count == 0);
    CHECK(g.stats().property_count == 0);
    g.insert(Term::iri("http://x.org/a"), Term::iri(vocab::rdf_type), Term::iri("http://x.org/T"));
    g.insert(Term::iri("http://x.org/a"), Term::iri("http://x.org/p1"), Term::literal("1"));
    g.insert(Term::iri("http://x.org/a"), Term::iri("http://x.org/p2"), Term::literal("2"));
    auto stats = g.stats();
    CHECK(stats.class_count == 1);
    CHECK(stats.property_count == 3);  // rdf:type, p1, p2
    CHECK(stats.class_histogram.at("http://x.org/T") == 1);
}

TEST_CASE("stats bounded by graph size") {
    Graph g;
    for (int i = 0; i < 10; ++i) {
        g.insert(Term::iri("http://x.org/s" + std::to_string(i)), Term::iri(vocab::rdf_type),
                 Term::iri("http://x.org/T" + std::to_string(i % 3)));
    }
    auto stats = g.stats();
    CHECK(stats.class_count <= static_cast<long long>(g.size()));
    CHECK(stats.property_count <= static_cast<long long>(g.size()));
}

TEST_CASE("scan with bound positions uses each index consistently") {
    Graph g;
    for (int i = 0; i < 20; ++i) {
        g.insert(Term::iri("http://x.org/s" + std::to_string(i % 4)),
                 Term::iri("http://x.org/p" + std::to_string(i % 3)),
                 Term::literal("v" + std::to_string(i % 5)));
    }
    auto count_scan = [&](std::optional<Term> s, std::optional<Term> p, std::optional<Term> o) {
        int found = 0;
        g.scan(s, p, o, [&](const rdf::Triple&) { ++found; });
        return found;
    };
    auto count_linear = [&](std::optional<Term> s, std::optional<Term> p, std::optional<Term> o) {
        int found = 0;
        for (const auto& t : g.triples()) {
            if ((!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o)) {
                ++found;
            }
        }
        return found;
    };
    Term s = Term::iri("http://x.org/s1");
    Term p = Term::iri("http://x.org/p2");
    Term o = Term::literal("v3");
    for (auto [bs, bp, bo] : std::vector<std::tuple<bool, bool, bool>>{
             {true, false, false},
             {false, true, false},
             {false, false, true},
             {true, true, false},
             {false, true, true},
             {true, true, true},
             {false, false, false}}) {
        auto os = bs ? std::make_optional(s) : std::nullopt;
        auto op = bp ? std::make_optional(p) : std::nullopt;
        auto oo = bo ? std::make_optional(o) : std::nullopt;
        CHECK(count_scan(os, op, oo) == count_linear(os, op, oo));
    }
}

TEST_CASE("canonical n-triples sorts and relabels blank nodes deterministically") {
    Graph a;
    a.insert(Term::bnode("x"), Term::iri("http://x.org/p"), Term::literal("1"));
    a.insert(Term::bnode("x"), Term::iri("http://x.org/q"), Term::bnode("y"));
    Graph b;
    b.insert(Term::bnode("m"), Term::iri("http://x.org/p"), Term::literal("1"));
    b.insert(Term::bnode("m"), Term::iri("http://x.org/q"), Term::bnode("n"));
    CHECK(rdf::to_ntriples_canonical(a) == rdf::to_ntriples_canonical(b));
    CHECK(rdf::isomorphic(a, b));

    Graph c;  // different structure, same size
    c.insert(Term::bnode("m"), Term::iri("http://x.org/p"), Term::literal("2"));
    c.insert(Term::bnode("m"), Term::iri("http://x.org/q"), Term::bnode("n"));
    CHECK_FALSE(rdf::isomorphic(a, c));
}
