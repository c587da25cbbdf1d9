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
#include "lodforge/query.hpp"
#include "lodforge/turtle.hpp"
#include "oracle_query.hpp"
#include "support.hpp"

using namespace lodforge;
using rdf::Graph;
using rdf::Query;
using rdf::ResultTable;
using rdf::Term;

namespace {

bool tables_equal(const ResultTable& a, const ResultTable& b) {
    if (a.columns != b.columns) return false;
    if (a.rows.size() != b.rows.size()) return false;
    for (size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i] != b.rows[i]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("the Gaelic count query totals distinct subjects") {
    Graph g = rdf::parse_turtle(testsupport::read_fixture("gaelic.ttl"));
    Query q = rdf::parse_query(testsupport::read_fixture("queries/listing1.rq"));
    ResultTable result = rdf::match(g, q);
    REQUIRE(result.columns == std::vector<std::string>{"total"});
    REQUIRE(result.rows.size() == 1);
    CHECK(result.rows[0][0]->value == "3");
    CHECK(tables_equal(result, testsupport::brute_force_match(g, q)));
}

TEST_CASE("the agent-label query returns the five duplicate rows") {
    Graph g = testsupport::transform_marc_fixture("stevenson_five.xml");
    Query q = rdf::parse_query(testsupport::read_fixture("queries/listing4.rq"));
    ResultTable result = rdf::match(g, q);
    CHECK(result.rows.size() == 5);
    CHECK(tables_equal(result, testsupport::brute_force_match(g, q)));
}

TEST_CASE("the Spanish-works query returns four titled rows") {
    Graph g = testsupport::transform_marc_fixture("nbs_sample.xml");
    Query q = rdf::parse_query(testsupport::read_fixture("queries/listing6.rq"));
    ResultTable result = rdf::match(g, q);
    REQUIRE(result.rows.size() == 4);
    bool found = false;
    for (const auto& row : result.rows) {
        if (row[0]->value == "http://example.org/9944730413804341#Work") {
            found = true;
            CHECK(row[1]->value == "El Palacio de Holyroodhouse");
        }
    }
    CHECK(found);
    CHECK(tables_equal(result, testsupport::brute_force_match(g, q)));
}

TEST_CASE("the translations query groups, filters and orders") {
    Graph g = testsupport::transform_marc_fixture("boslit_sample.xml");
    Query q = rdf::parse_query(testsupport::read_fixture("queries/listing7.rq"));
    ResultTable result = rdf::match(g, q);
    // hand tally over the fixture: Italian 6, Spanish 3, German 2; French
    // drops below the HAVING threshold
    REQUIRE(result.rows.size() == 3);
    CHECK(result.rows[0][0]->value == "Strange case of Doctor Jekyll and Mister Hyde. Italian");
    CHECK(result.rows[0][1]->value == "6");
    CHECK(result.rows[1][0]->value == "Treasure island. Spanish");
    CHECK(result.rows[1][1]->value == "3");
    CHECK(result.rows[2][0]->value == "Treasure island. German");
    CHECK(result.rows[2][1]->value == "2");
    CHECK(tables_equal(result, testsupport::brute_force_match(g, q)));
}

TEST_CASE("the editions query binds a fixed title") {
    Graph g = testsupport::transform_marc_fixture("boslit_sample.xml");
    Query q = rdf::parse_query(testsupport::read_fixture("queries/listing8.rq"));
    ResultTable result = rdf::match(g, q);
    CHECK(result.rows.size() == 6);
    bool found = false;
    for (const auto& row : result.rows) {
        if (row[0]->value == "http://example.org/15726#Work") {
            found = true;
            CHECK(row[2]->value == "http://example.org/15726#Hub240-10");
        }
    }
    CHECK(found);
    CHECK(tables_equal(result, testsupport::brute_force_match(g, q)));
}

TEST_CASE("any query over the empty graph yields no rows") {
    Graph g;
    Query q = rdf::parse_query("SELECT ?s WHERE { ?s <http://x.org/p> ?o }");
    CHECK(rdf::match(g, q).rows.empty());
}

TEST_CASE("projecting an unbound variable is a compile error") {
    Query q = rdf::parse_query("SELECT ?nope WHERE { ?s <http://x.org/p> ?o }");
    Graph g;
    CHECK_THROWS_AS(rdf::match(g, q), QueryError);
}

TEST_CASE("unsupported constructs are named in the error") {
    try {
        rdf::parse_query("SELECT ?s WHERE { ?s <http://x.org/p> ?o OPTIONAL { ?s ?p ?o } }");
        FAIL("expected QueryError");
    } catch (const QueryError& e) {
        CHECK(std::string(e.what()).find("OPTIONAL") != std::string::npos);
    }
}

TEST_CASE("equality filters restrict bindings") {
    Graph g;
    g.insert(Term::iri("http://x.org/a"), Term::iri("http://x.org/p"), Term::literal("yes"));
    g.insert(Term::iri("http://x.org/b"), Term::iri("http://x.org/p"), Term::literal("no"));
    Query q = rdf::parse_query("SELECT ?s WHERE { ?s <http://x.org/p> ?o . FILTER (?o = \"yes\") }");
    ResultTable result = rdf::match(g, q);
    REQUIRE(result.rows.size() == 1);
    CHECK(result.rows[0][0]->value == "http://x.org/a");
}

TEST_CASE("regex without str() does not match IRIs") {
    Graph g;
    g.insert(Term::iri("http://x.org/gaelic"), Term::iri("http://x.org/p"),
             Term::iri("http://x.org/GaelicObject"));
    Query no_str = rdf::parse_query(
        "SELECT ?o WHERE { ?s <http://x.org/p> ?o . FILTER regex(?o, \"Gaelic\") }");
    CHECK(rdf::match(g, no_str).rows.empty());
    Query with_str = rdf::parse_query(
        "SELECT ?o WHERE { ?s <http://x.org/p> ?o . FILTER regex(str(?o), \"Gaelic\") }");
    CHECK(rdf::match(g, with_str).rows.size() == 1);
}

TEST_CASE("engine equals the brute-force oracle on randomized pairs") {
    std::mt19937 rng(20260808);
    for (int i = 0; i < 120; ++i) {
        Graph g = testsupport::random_graph(rng, 300, /*with_bnodes=*/false);
        Query q = testsupport::random_query(rng);
        ResultTable fast = rdf::match(g, q);
        ResultTable slow = testsupport::brute_force_match(g, q);
        REQUIRE_MESSAGE(tables_equal(fast, slow), "divergence at iteration ", i);
    }
}
