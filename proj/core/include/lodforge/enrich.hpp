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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lodforge/graph.hpp"

namespace lodforge::enrich {

/// Controlled-vocabulary table snapshot. Entries map a code or term to an
/// IRI under http://id.loc.gov/vocabulary/{name}/. Lookups never synthesize
/// an IRI from an unvalidated string: unknown input is a rejection.
struct VocabularyTable {
    std::string name;
    std::map<std::string, std::string> entries;

    /// File format: one `<code>\t<label>` per line, '#' comments. The IRI is
    /// the vocabulary namespace plus the code.
    static VocabularyTable load(const std::string& path, const std::string& name);
};

class Vocabularies {
public:
    /// Shipped tables from the data directory.
    static Vocabularies load_defaults();
    static Vocabularies load(const std::string& languages_path, const std::string& geo_path,
                             const std::string& relators_path);

    /// Language code lookup (trimmed, lowercased). Unknown, empty, or
    /// whitespace-containing codes are rejected.
    std::optional<std::string> resolve_language(const std::string& code) const;

    /// Geographic-area code lookup; trailing hyphen padding is trimmed and
    /// codes with embedded (or encoded) whitespace are rejected.
    std::optional<std::string> resolve_geographic_area(const std::string& code) const;

    /// Relator term lookup over the 15-entry table. A miss is a valid
    /// outcome: the caller emits the role as a text literal.
    std::optional<std::string> resolve_relator(const std::string& term) const;

    const VocabularyTable& languages() const { return languages_; }
    const VocabularyTable& geographic_areas() const { return geographic_areas_; }
    const VocabularyTable& relators() const { return relators_; }

private:
    VocabularyTable languages_;
    VocabularyTable geographic_areas_;
    VocabularyTable relators_;
};

struct ReconciliationCandidate {
    std::string subject_iri;
    std::string external_iri;
    std::string matched_label;
    double score = 0;  // 1.0 exact + dates, 0.7 exact, 0.4 normalized
    std::vector<std::string> evidence;
};

struct ExternalEntity {
    std::string iri;
    std::string label;
};

/// Label-lookup seam over the SPARQL-protocol HTTP interface; the fixture
/// client reads the same application/sparql-results+json document from a
/// file and filters it locally.
class EndpointClient {
public:
    virtual ~EndpointClient() = default;
    /// Entities whose label contains the needle. Throws on transport or
    /// response-format failure.
    virtual std::vector<ExternalEntity> lookup(const std::string& needle) = 0;
};

std::unique_ptr<EndpointClient> make_http_client(const std::string& endpoint_url, int timeout_ms);
std::unique_ptr<EndpointClient> make_fixture_client(const std::string& path);

struct ReconcileOptions {
    std::string entity_kind = "agent";
    double floor = 0.4;
    int concurrency = 4;
};

struct ReconcileOutcome {
    std::vector<ReconciliationCandidate> candidates;  // (subject, -score, external) order
    std::vector<std::string> errors;                  // per-entity failures
};

/// Candidate generation for every labeled resource of the kind; read-only
/// on the graph. Lookups run with a bounded concurrency budget and merge
/// deterministically.
ReconcileOutcome reconcile(const rdf::Graph& graph, EndpointClient& client,
                           const ReconcileOptions& options);

struct AcceptedLink {
    std::string subject_iri;
    std::string external_iri;
};

/// Acceptance file: one `<subject IRI> <external IRI>` pair per line.
std::vector<AcceptedLink> load_acceptance_file(const std::string& path);

/// Adds one owl:sameAs triple per accepted pair; idempotent. Throws
/// ConfigError listing the IRI when a subject is absent from the graph.
void apply_sameas(rdf::Graph& graph, const std::vector<AcceptedLink>& accepted);

/// Candidate list serialized as JSON (stable order) for the enrich stage.
std::string candidates_to_json(const ReconcileOutcome& outcome);

}  // namespace lodforge::enrich
