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

#include <httplib.h>

#include <thread>

#include "lodforge/audit.hpp"
#include "lodforge/errors.hpp"
#include "lodforge/enrich.hpp"
#include "lodforge/vocab.hpp"
#include "support.hpp"

using namespace lodforge;

namespace {

/// Local HTTP stub bound to an ephemeral port.
struct StubServer {
    httplib::Server server;
    int port = 0;
    std::thread thread;

    StubServer() {
        server.Get("/sparql", [this](const httplib::Request& req, httplib::Response& res) {
            last_query = req.get_param_value("query");
            res.set_content(testsupport::read_fixture("reconcile_kb.json"),
                            "application/sparql-results+json");
        });
        server.Get("/broken", [](const httplib::Request&, httplib::Response& res) {
            res.status = 500;
            res.set_content("not json", "text/plain");
        });
        server.Get("/ok", [](const httplib::Request&, httplib::Response& res) {
            res.set_content("fine", "text/plain");
        });
        server.Get("/gone", [](const httplib::Request&, httplib::Response& res) {
            res.status = 404;
        });
        // HEAD-hostile resource: forces the GET fallback
        server.Get("/no-head", [](const httplib::Request& req, httplib::Response& res) {
            if (req.method == "HEAD") {
                res.status = 405;
            } else {
                res.set_content("body", "text/plain");
            }
        });
        port = server.bind_to_any_port("127.0.0.1");
        thread = std::thread([this] { server.listen_after_bind(); });
        server.wait_until_ready();
    }

    ~StubServer() {
        server.stop();
        thread.join();
    }

    std::string origin() const { return "http://127.0.0.1:" + std::to_string(port); }
    std::string last_query;
};

rdf::Graph one_agent() {
    rdf::Graph g;
    rdf::Term agent = rdf::Term::iri("http://example.org/1#Agent100-9");
    g.insert(agent, rdf::Term::iri(vocab::rdf_type), rdf::Term::iri(vocab::bf + "Person"));
    g.insert(agent, rdf::Term::iri(vocab::rdfs_label),
             rdf::Term::literal("Stevenson, Robert Louis, 1850-1894"));
    return g;
}

}  // namespace

TEST_CASE("the endpoint client speaks the SPARQL query protocol") {
    StubServer stub;
    auto client = enrich::make_http_client(stub.origin() + "/sparql", 5000);
    auto entities = client->lookup("Stevenson, Robert Louis");
    CHECK(entities.size() == 6);  // the stub returns the whole fixture
    CHECK(stub.last_query.find("SELECT") != std::string::npos);
    CHECK(stub.last_query.find("Stevenson") != std::string::npos);

    rdf::Graph g = one_agent();
    auto outcome = enrich::reconcile(g, *client, {});
    REQUIRE(outcome.errors.empty());
    REQUIRE_FALSE(outcome.candidates.empty());
    CHECK(outcome.candidates.front().external_iri == "http://viaf.example/95207079");
    CHECK(outcome.candidates.front().score == doctest::Approx(1.0));
}

TEST_CASE("endpoint failures are per-entity errors, not aborts") {
    StubServer stub;
    auto client = enrich::make_http_client(stub.origin() + "/broken", 5000);
    rdf::Graph g = one_agent();
    auto outcome = enrich::reconcile(g, *client, {});
    CHECK(outcome.candidates.empty());
    REQUIRE(outcome.errors.size() == 1);
    CHECK(outcome.errors[0].find("http://example.org/1#Agent100-9") != std::string::npos);
}

TEST_CASE("a throwing client never stops the remaining entities") {
    struct FlakyClient : enrich::EndpointClient {
        std::vector<enrich::ExternalEntity> lookup(const std::string& needle) override {
            if (needle.find("Stevenson") != std::string::npos) {
                throw IoError("synthetic outage", "stub");
            }
            return {{"http://kb.example/scott", "Scott, Walter, 1771-1832"}};
        }
    };
    rdf::Graph g = one_agent();
    rdf::Term scott = rdf::Term::iri("http://example.org/2#Agent100-3");
    g.insert(scott, rdf::Term::iri(vocab::rdf_type), rdf::Term::iri(vocab::bf + "Person"));
    g.insert(scott, rdf::Term::iri(vocab::rdfs_label),
             rdf::Term::literal("Scott, Walter, 1771-1832"));

    FlakyClient client;
    enrich::ReconcileOptions options;
    options.concurrency = 1;
    auto outcome = enrich::reconcile(g, client, options);
    REQUIRE(outcome.errors.size() == 1);
    CHECK(outcome.errors[0].find("synthetic outage") != std::string::npos);
    REQUIRE(outcome.candidates.size() == 1);
    CHECK(outcome.candidates[0].subject_iri == "http://example.org/2#Agent100-3");
}

TEST_CASE("the HTTP probe falls back to GET on 405") {
    StubServer stub;
    auto probe = audit::make_http_probe(5000);
    CHECK(probe->status_of(stub.origin() + "/ok") == 200);
    CHECK(probe->status_of(stub.origin() + "/gone") == 404);
    CHECK(probe->status_of(stub.origin() + "/no-head") == 200);
    CHECK(probe->status_of("http://127.0.0.1:1/unreachable") == 0);
}
