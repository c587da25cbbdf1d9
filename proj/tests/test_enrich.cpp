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

#include "lodforge/enrich.hpp"
#include "lodforge/errors.hpp"
#include "lodforge/vocab.hpp"
#include "support.hpp"

using namespace lodforge;
using rdf::Graph;
using rdf::Term;

TEST_CASE("language codes resolve only through the shipped table") {
    const auto& v = testsupport::vocabularies();
    CHECK(v.resolve_language("spa").value() == "http://id.loc.gov/vocabulary/languages/spa");
    CHECK(v.resolve_language(" SPA ").value() == "http://id.loc.gov/vocabulary/languages/spa");
    CHECK_FALSE(v.resolve_language("d").has_value());
    CHECK_FALSE(v.resolve_language("").has_value());
    CHECK_FALSE(v.resolve_language("sp a").has_value());
}

TEST_CASE("geographic codes reject embedded whitespace and trim padding") {
    const auto& v = testsupport::vocabularies();
    CHECK(v.resolve_geographic_area("e-uk-st").value()
          == "http://id.loc.gov/vocabulary/geographicAreas/e-uk-st");
    CHECK(v.resolve_geographic_area("e-uk---").value()
          == "http://id.loc.gov/vocabulary/geographicAreas/e-uk");
    CHECK_FALSE(v.resolve_geographic_area("e-uk- st").has_value());
    CHECK_FALSE(v.resolve_geographic_area("zz-fake").has_value());
}

TEST_CASE("relator terms resolve or fall back to text") {
    const auto& v = testsupport::vocabularies();
    CHECK(v.resolve_relator("author").value() == "http://id.loc.gov/vocabulary/relators/aut");
    CHECK(v.resolve_relator("Contributor.").value()
          == "http://id.loc.gov/vocabulary/relators/ctb");
    CHECK_FALSE(v.resolve_relator("translator").has_value());
    CHECK_FALSE(v.resolve_relator("auhtor").has_value());
    CHECK(v.relators().entries.size() == 15);
}

namespace {

Graph agent_graph() {
    Graph g;
    auto agent = [&](const std::string& iri, const std::string& label) {
        g.insert(Term::iri(iri), Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "Person"));
        g.insert(Term::iri(iri), Term::iri(vocab::rdfs_label), Term::literal(label));
    };
    agent("http://example.org/1#Agent100-9", "Stevenson, Robert Louis, 1850-1894");
    agent("http://example.org/2#Agent100-6", "Scott, Walter, 1771-1832");
    agent("http://example.org/3#Agent700-27", "Henley, William Ernest, 1849-1903");
    agent("http://example.org/4#Agent100-4", "Nobody, At All, 1700-1750");
    return g;
}

}  // namespace

TEST_CASE("reconciliation scores the 1.0/0.7/0.4 ladder") {
    Graph g = agent_graph();
    auto client = enrich::make_fixture_client(testsupport::fixture_path("reconcile_kb.json"));
    enrich::ReconcileOptions options;
    options.floor = 0.3;
    auto outcome = enrich::reconcile(g, *client, options);
    REQUIRE(outcome.errors.empty());

    auto candidates_for = [&](const std::string& subject) {
        std::vector<enrich::ReconciliationCandidate> out;
        for (const auto& c : outcome.candidates) {
            if (c.subject_iri == subject) out.push_back(c);
        }
        return out;
    };

    auto stevenson = candidates_for("http://example.org/1#Agent100-9");
    REQUIRE(stevenson.size() == 3);
    CHECK(stevenson[0].external_iri == "http://viaf.example/95207079");
    CHECK(stevenson[0].score == doctest::Approx(1.0));
    CHECK(stevenson[1].external_iri == "http://wd.example/Q1317270");
    CHECK(stevenson[1].score == doctest::Approx(0.7));
    CHECK(stevenson[2].external_iri == "http://kb.example/stevenson-folded");
    CHECK(stevenson[2].score == doctest::Approx(0.4));
    // monotone ladder
    CHECK(stevenson[0].score >= stevenson[1].score);
    CHECK(stevenson[1].score >= stevenson[2].score);

    // ambiguity is surfaced: two equal-score candidates sorted by IRI
    auto henley = candidates_for("http://example.org/3#Agent700-27");
    REQUIRE(henley.size() == 2);
    CHECK(henley[0].external_iri == "http://kb.example/henley1");
    CHECK(henley[1].external_iri == "http://kb.example/henley2");
    CHECK(henley[0].score == doctest::Approx(1.0));
    CHECK(henley[1].score == doctest::Approx(1.0));

    // absent label: no candidates
    CHECK(candidates_for("http://example.org/4#Agent100-4").empty());
}

TEST_CASE("the floor drops weak candidates") {
    Graph g = agent_graph();
    auto client = enrich::make_fixture_client(testsupport::fixture_path("reconcile_kb.json"));
    enrich::ReconcileOptions options;
    options.floor = 0.65;
    auto outcome = enrich::reconcile(g, *client, options);
    for (const auto& c : outcome.candidates) CHECK(c.score >= 0.65);
}

TEST_CASE("reconcile leaves the graph untouched") {
    Graph g = agent_graph();
    size_t before = g.size();
    auto client = enrich::make_fixture_client(testsupport::fixture_path("reconcile_kb.json"));
    enrich::reconcile(g, *client, {});
    CHECK(g.size() == before);
}

TEST_CASE("apply_sameas adds one link per accepted pair, idempotently") {
    Graph g = agent_graph();
    size_t before = g.size();
    enrich::apply_sameas(g, {});
    CHECK(g.size() == before);

    std::vector<enrich::AcceptedLink> accepted = {
        {"http://example.org/1#Agent100-9", "http://viaf.example/95207079"}};
    enrich::apply_sameas(g, accepted);
    CHECK(g.size() == before + 1);
    CHECK(g.contains({Term::iri("http://example.org/1#Agent100-9"),
                      Term::iri(vocab::owl_sameas), Term::iri("http://viaf.example/95207079")}));
    enrich::apply_sameas(g, accepted);
    CHECK(g.size() == before + 1);
}

TEST_CASE("apply_sameas rejects absent subjects by IRI") {
    Graph g = agent_graph();
    try {
        enrich::apply_sameas(g, {{"http://example.org/ghost", "http://viaf.example/1"}});
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("http://example.org/ghost") != std::string::npos);
    }
}

TEST_CASE("acceptance files parse one pair per line") {
    testsupport::TempDir dir("accept");
    fs::write_file(dir.file("pairs.txt"),
                   "# accepted links\n"
                   "http://example.org/1#Agent100-9 http://viaf.example/95207079\n"
                   "\n"
                   "http://example.org/2#Agent100-6\thttp://viaf.example/95207986\n");
    auto pairs = enrich::load_acceptance_file(dir.file("pairs.txt"));
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].subject_iri == "http://example.org/1#Agent100-9");
    CHECK(pairs[1].external_iri == "http://viaf.example/95207986");
}
