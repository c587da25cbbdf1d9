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

#include <set>

#include "lodforge/audit.hpp"
#include "lodforge/errors.hpp"
#include "lodforge/fs.hpp"
#include "lodforge/turtle.hpp"
#include "lodforge/vocab.hpp"
#include "support.hpp"

using namespace lodforge;
using rdf::Graph;
using rdf::Term;

namespace {

std::vector<audit::LiteralRule> default_literal_rules() {
    return audit::load_literal_rules(fs::data_file("audit/literal_rules.tsv"));
}

audit::Axioms default_axioms() { return audit::Axioms::load(fs::data_file("audit/axioms.tsv")); }

audit::AuditConfig base_config() {
    audit::AuditConfig config;
    config.literal_rules = default_literal_rules();
    config.axioms = default_axioms();
    config.formats = {"turtle"};
    return config;
}

Graph labeled_agents(const std::vector<std::string>& labels) {
    Graph g;
    int i = 0;
    for (const auto& label : labels) {
        Term agent = Term::iri("http://example.org/" + std::to_string(i++) + "#Agent100-1");
        g.insert(agent, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "Person"));
        g.insert(agent, Term::iri(vocab::rdfs_label), Term::literal(label));
    }
    return g;
}

}  // namespace

TEST_CASE("the catalogue is the full criteria table") {
    const auto& rows = audit::catalogue();
    CHECK(rows.size() == 35);
    std::set<std::string> dimensions;
    std::set<std::string> ids;
    for (const auto& row : rows) {
        dimensions.insert(row.dimension);
        CHECK(ids.insert(row.id).second);  // ids unique
    }
    CHECK(dimensions.size() == 11);
    CHECK(dimensions
          == std::set<std::string>{"Accuracy", "Trustworthiness", "Consistency", "Relevancy",
                                   "Completeness", "Timeliness", "EaseOfUnderstanding",
                                   "Interoperability", "Accessibility", "Licensing",
                                   "Interlinking"});
}

TEST_CASE("role typos and stray punctuation violate the literal rules") {
    Graph g;
    Term c = Term::iri("http://example.org/1#Contribution100-3");
    g.insert(c, Term::iri(vocab::bf + "role"), Term::literal("auhtor"));
    g.insert(c, Term::iri(vocab::bf + "role"), Term::literal("."));
    g.insert(c, Term::iri(vocab::bf + "role"), Term::literal("translator"));
    Term p = Term::iri("http://example.org/1#ProvisionActivity260-4");
    g.insert(p, Term::iri(vocab::bf + "date"), Term::literal("1850"));
    g.insert(p, Term::iri(vocab::bf + "date"), Term::literal("[1883?]"));

    auto result = audit::syntactic_validity_literals(g, default_literal_rules());
    CHECK(result.checked == 5);
    CHECK(result.valid == 3);
    CHECK(result.score == doctest::Approx(3.0 / 5.0));
    bool auhtor_flagged = false;
    for (const auto& v : result.violations) {
        if (v.find("auhtor") != std::string::npos) auhtor_flagged = true;
    }
    CHECK(auhtor_flagged);
}

TEST_CASE("a 96-of-100 fixture scores 0.96") {
    Graph g;
    for (int i = 0; i < 100; ++i) {
        Term c = Term::iri("http://example.org/" + std::to_string(i) + "#Contribution100-3");
        g.insert(c, Term::iri(vocab::bf + "role"),
                 Term::literal(i < 96 ? "author" : "auhtor" + std::to_string(i)));
    }
    auto result = audit::syntactic_validity_literals(g, default_literal_rules());
    CHECK(result.checked == 100);
    CHECK(result.score == doctest::Approx(0.96));
}

TEST_CASE("five identically labeled agents form one cluster of five") {
    Graph g = testsupport::transform_marc_fixture("stevenson_five.xml");
    auto result = audit::detect_duplicate_agents(g, base_config());
    REQUIRE(result.clusters.size() == 1);
    CHECK(result.clusters[0].size() == 5);
    std::set<std::string> expected = {
        "http://example.org/9929751083804341#Agent100-9",
        "http://example.org/9923749153804341#Agent100-12",
        "http://example.org/9923749153804341#Agent800-28",
        "http://example.org/9915244463804341#Agent100-13",
        "http://example.org/9944502973804341#Agent100-10",
    };
    CHECK(std::set<std::string>(result.clusters[0].begin(), result.clusters[0].end()) == expected);
}

TEST_CASE("all-distinct labels yield zero clusters and score 1") {
    Graph g = labeled_agents({"Alpha, One", "Beta, Two", "Gamma, Three"});
    auto result = audit::detect_duplicate_agents(g, base_config());
    CHECK(result.clusters.empty());
    CHECK(result.score == doctest::Approx(1.0));
}

TEST_CASE("labels differing only by a trailing period cluster together") {
    Graph g = labeled_agents({"Stevenson, Robert Louis, 1850-1894",
                              "Stevenson, Robert Louis, 1850-1894."});
    auto result = audit::detect_duplicate_agents(g, base_config());
    REQUIRE(result.clusters.size() == 1);
    CHECK(result.clusters[0].size() == 2);
    CHECK(result.score == doctest::Approx(0.0));
}

TEST_CASE("duplicate detection is insensitive to triple order") {
    std::vector<std::string> labels = {"A, One, 1900-1980", "A, One, 1900-1980", "B, Two"};
    Graph forward = labeled_agents(labels);
    std::reverse(labels.begin(), labels.end());
    Graph backward = labeled_agents(labels);
    auto a = audit::detect_duplicate_agents(forward, base_config());
    auto b = audit::detect_duplicate_agents(backward, base_config());
    CHECK(a.clusters.size() == b.clusters.size());
    CHECK(a.score == doctest::Approx(b.score));
}

TEST_CASE("disjointness violations are reported per resource") {
    Graph g;
    Term both = Term::iri("http://example.org/odd");
    g.insert(both, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "Person"));
    g.insert(both, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "Organization"));
    auto result = audit::consistency_check(g, default_axioms());
    CHECK(result.class_violations.size() == 1);
}

TEST_CASE("clean transformed fixtures satisfy the axioms") {
    Graph g = testsupport::transform_marc_fixture("nbs_sample.xml");
    auto result = audit::consistency_check(g, default_axioms());
    CHECK(result.class_violations.empty());
    CHECK(result.relation_violations.empty());
}

TEST_CASE("a literal object where a resource is required is one violation") {
    Graph g;
    g.insert(Term::iri("http://example.org/w#Work"), Term::iri(vocab::bf + "contribution"),
             Term::literal("should be a node"));
    auto result = audit::consistency_check(g, default_axioms());
    CHECK(result.relation_violations.size() == 1);
}

TEST_CASE("completeness scores schema, column and population") {
    Graph g;
    // 20 instances of a class; 10 carry both gold properties, 10 carry one
    for (int i = 0; i < 20; ++i) {
        Term node = Term::iri("http://example.org/v" + std::to_string(i));
        g.insert(node, Term::iri(vocab::rdf_type), Term::iri(vocab::schema + "VideoObject"));
        g.insert(node, Term::iri(vocab::schema + "name"), Term::literal("v" + std::to_string(i)));
        if (i < 10) {
            g.insert(node, Term::iri(vocab::schema + "datePublished"), Term::literal("1950"));
        }
    }
    g.insert(Term::iri("http://example.org/p"), Term::iri(vocab::rdf_type),
             Term::iri(vocab::schema + "Person"));
    g.insert(Term::iri("http://example.org/p"), Term::iri(vocab::schema + "name"),
             Term::literal("Grierson, John, 1898-1972"));
    g.insert(Term::iri("http://example.org/p2"), Term::iri(vocab::rdf_type),
             Term::iri(vocab::schema + "Person"));
    g.insert(Term::iri("http://example.org/p2"), Term::iri(vocab::schema + "name"),
             Term::literal("Tait, Margaret, 1918-1999"));

    audit::GoldStandard gold;
    gold.patterns = {
        {"Video", vocab::schema + "VideoObject",
         {vocab::schema + "name", vocab::schema + "datePublished"}},
        {"Author", vocab::schema + "Person", {vocab::schema + "name"}},
    };
    gold.population = {{"Grierson, John, 1898-1972", "q1"},
                       {"Tait, Margaret, 1918-1999", "q2"},
                       {"Annand, Louise, 1915-2012", "q3"},
                       {"Elder, John C., 1910-1999", "q4"}};

    auto scores = audit::completeness(g, gold);
    CHECK(scores.schema == doctest::Approx(1.0));
    // hand tally: name 20/20 = 1, date 10/20 = 0.5, person name 2/2 = 1 -> mean 2.5/3
    CHECK(scores.column == doctest::Approx(2.5 / 3.0).epsilon(1e-12));
    CHECK(scores.population == doctest::Approx(0.5));
}

TEST_CASE("creators kept as credit text depress the author column") {
    Graph g;
    for (int i = 0; i < 4; ++i) {
        Term node = Term::iri("http://example.org/f" + std::to_string(i));
        g.insert(node, Term::iri(vocab::rdf_type), Term::iri(vocab::schema + "VideoObject"));
        g.insert(node, Term::iri(vocab::schema + "creditText"), Term::literal("J. Blogs, director"));
    }
    audit::GoldStandard gold;
    gold.patterns = {{"Video", vocab::schema + "VideoObject", {vocab::schema + "author"}}};
    gold.population = {{"J. Blogs", "x"}};
    auto scores = audit::completeness(g, gold);
    CHECK(scores.column == doctest::Approx(0.0));
}

TEST_CASE("gold classes without instances are excluded and reported") {
    Graph g;
    g.insert(Term::iri("http://example.org/v"), Term::iri(vocab::rdf_type),
             Term::iri(vocab::schema + "VideoObject"));
    g.insert(Term::iri("http://example.org/v"), Term::iri(vocab::schema + "name"),
             Term::literal("v"));
    audit::GoldStandard gold;
    gold.patterns = {{"Video", vocab::schema + "VideoObject", {vocab::schema + "name"}},
                     {"Ghost", "http://example.org/Ghost", {vocab::schema + "name"}}};
    gold.population = {{"v", "x"}};
    auto scores = audit::completeness(g, gold);
    CHECK(scores.column == doctest::Approx(1.0));
    bool noted = false;
    for (const auto& note : scores.notes) {
        if (note.find("Ghost") != std::string::npos) noted = true;
    }
    CHECK(noted);
}

TEST_CASE("link checking against the scripted stub") {
    Graph g = rdf::parse_turtle(testsupport::read_fixture("linkcheck.ttl"));
    auto probe = audit::make_scripted_probe(testsupport::fixture_path("linkcheck.rules"));

    SUBCASE("all sampled links respond on a happy stub") {
        testsupport::TempDir dir("stub");
        fs::write_file(dir.file("ok.rules"), ".* 200\n");
        auto happy = audit::make_scripted_probe(dir.file("ok.rules"));
        auto result = audit::check_links(g, "http://example.org/", 100, 17, *happy);
        CHECK(result.probed == 9);
        CHECK(result.rate == doctest::Approx(1.0));
    }

    SUBCASE("the 6-of-9 scenario scores two thirds") {
        auto result = audit::check_links(g, "http://example.org/", 100, 17, *probe);
        CHECK(result.probed == 9);
        CHECK(result.ok == 6);
        CHECK(result.rate == doctest::Approx(2.0 / 3.0).epsilon(0.001));
        bool d_failed = false;
        for (const auto& [url, status] : result.failures) {
            if (url == "http://id.loc.gov/vocabulary/languages/d") {
                d_failed = true;
                CHECK(status == 404);
            }
        }
        CHECK(d_failed);
    }

    SUBCASE("identical seed and size reproduce the sample") {
        auto a = audit::check_links(g, "http://example.org/", 5, 42, *probe);
        auto b = audit::check_links(g, "http://example.org/", 5, 42, *probe);
        CHECK(a.sample == b.sample);
        auto c = audit::check_links(g, "http://example.org/", 5, 43, *probe);
        CHECK(a.sample != c.sample);  // overwhelmingly likely for 9-choose-5
    }
}

TEST_CASE("interlinking rate counts subjects with external links") {
    Graph none;
    none.insert(Term::iri("http://example.org/a"), Term::iri(vocab::rdfs_label),
                Term::literal("a"));
    CHECK(audit::interlinking_rate(none, "http://example.org/") == doctest::Approx(0.0));

    Graph all;
    all.insert(Term::iri("http://example.org/a"), Term::iri(vocab::owl_sameas),
               Term::iri("http://viaf.example/1"));
    CHECK(audit::interlinking_rate(all, "http://example.org/") == doctest::Approx(1.0));

    Graph sparse;  // 2 of 500 subjects linked
    for (int i = 0; i < 500; ++i) {
        Term s = Term::iri("http://example.org/s" + std::to_string(i));
        sparse.insert(s, Term::iri(vocab::rdfs_label), Term::literal("x"));
        if (i < 2) {
            sparse.insert(s, Term::iri(vocab::owl_sameas),
                          Term::iri("http://viaf.example/" + std::to_string(i)));
        }
    }
    CHECK(audit::interlinking_rate(sparse, "http://example.org/") == doctest::Approx(0.004));
}

TEST_CASE("evaluate reports every catalogue criterion exactly once") {
    Graph g = rdf::parse_turtle(testsupport::read_fixture("paper_profile.ttl"));
    auto report = audit::evaluate(g, base_config());
    REQUIRE(report.criteria.size() == audit::catalogue().size());
    std::set<std::string> ids;
    for (const auto& c : report.criteria) ids.insert(c.id);
    CHECK(ids.size() == report.criteria.size());
    for (const auto& row : audit::catalogue()) CHECK(ids.count(row.id) == 1);
}

TEST_CASE("the paper-profile fixture reproduces the structurally forced scores") {
    Graph g = rdf::parse_turtle(testsupport::read_fixture("paper_profile.ttl"));
    auto report = audit::evaluate(g, base_config());
    CHECK(report.find("accessibility.sparql_endpoint")->score == doctest::Approx(0.0));
    CHECK(report.find("accessibility.dereferencing")->score == doctest::Approx(0.0));
    CHECK(report.find("accessibility.content_negotiation")->score == doctest::Approx(0.0));
    CHECK(report.find("licensing.machine_readable")->score == doctest::Approx(1.0));
    CHECK(report.find("interoperability.blank_nodes")->score == doctest::Approx(1.0));
    CHECK(report.find("accessibility.rdf_export")->score == doctest::Approx(1.0));
    CHECK(report.find("timeliness.frequency")->score == doctest::Approx(0.5));
}

TEST_CASE("zero links and no license score zero without failing") {
    Graph g;
    g.insert(Term::iri("http://example.org/a"), Term::iri(vocab::rdf_type),
             Term::iri(vocab::bf + "Work"));
    g.insert(Term::iri("http://example.org/a"), Term::iri(vocab::rdfs_label), Term::literal("a"));
    auto report = audit::evaluate(g, base_config());
    CHECK(report.find("interlinking.sameas_rate")->score == doctest::Approx(0.0));
    CHECK(report.find("licensing.machine_readable")->score == doctest::Approx(0.0));
}

TEST_CASE("assisted criteria without inputs are marked, never silently zero") {
    Graph g = rdf::parse_turtle(testsupport::read_fixture("paper_profile.ttl"));
    auto report = audit::evaluate(g, base_config());
    CHECK(report.find("completeness.schema")->status == audit::CriterionStatus::NotEvaluated);
    CHECK(report.find("accuracy.semantic_validity_triples")->status
          == audit::CriterionStatus::NotEvaluated);
    CHECK(report.find("interlinking.external_uri_validity")->status
          == audit::CriterionStatus::Skipped);
}

TEST_CASE("dimension rollups are the mean of the evaluated criteria") {
    Graph g = rdf::parse_turtle(testsupport::read_fixture("paper_profile.ttl"));
    auto report = audit::evaluate(g, base_config());
    for (const auto& [dimension, mean] : report.dimension_means) {
        double sum = 0;
        long long n = 0;
        for (const auto& c : report.criteria) {
            if (c.dimension == dimension && c.status == audit::CriterionStatus::Scored) {
                sum += c.score;
                ++n;
            }
        }
        REQUIRE(n > 0);
        CHECK(mean == doctest::Approx(sum / n));
    }
    for (const auto& c : report.criteria) {
        if (c.status == audit::CriterionStatus::Scored) {
            CHECK(c.score >= 0.0);
            CHECK(c.score <= 1.0);
        }
    }
}

TEST_CASE("semantic validity diffs the reference expectations") {
    Graph g = testsupport::transform_marc_fixture("stevenson_five.xml");
    audit::ReferenceExpectations reference;
    reference.by_iri["http://example.org/9929751083804341#Agent100-9"]
                    [vocab::rdfs_label] = "Stevenson, Robert Louis, 1850-1894";
    reference.by_iri["http://example.org/9929751083804341#Agent100-9"]
                    [vocab::rdf_type] = vocab::bf + "Person";
    reference.by_iri["http://example.org/9944730413804341#Work"]
                    [vocab::rdfs_label] = "Wrong title";
    auto config = base_config();
    config.reference = &reference;
    auto report = audit::evaluate(g, config);
    CHECK(report.find("accuracy.semantic_validity_triples")->score
          == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("report serializations carry every criterion") {
    Graph g = rdf::parse_turtle(testsupport::read_fixture("paper_profile.ttl"));
    auto report = audit::evaluate(g, base_config());
    std::string json = report.to_json();
    std::string text = report.to_text();
    for (const auto& row : audit::catalogue()) {
        CHECK(json.find(row.id) != std::string::npos);
        CHECK(text.find(row.name) != std::string::npos);
    }
    CHECK(text.find("Licensing") != std::string::npos);
}

TEST_CASE("auditing an empty graph is refused") {
    Graph g;
    CHECK_THROWS_AS(audit::evaluate(g, base_config()), ConfigError);
}
