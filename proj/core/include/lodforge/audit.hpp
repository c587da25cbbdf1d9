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
#include "lodforge/shapes.hpp"

namespace lodforge::audit {

enum class EvaluatorKind { Automatic, Network, Assisted, Declared };
enum class CriterionStatus { Scored, Skipped, NotEvaluated };

const std::string& to_string(EvaluatorKind kind);
const std::string& to_string(CriterionStatus status);

struct Criterion {
    std::string id;
    std::string dimension;
    std::string name;  // table row label
    EvaluatorKind kind = EvaluatorKind::Automatic;
    CriterionStatus status = CriterionStatus::NotEvaluated;
    double score = 0;
    std::vector<std::string> evidence;
};

struct CatalogueRow {
    const char* id;
    const char* dimension;
    const char* name;
    EvaluatorKind kind;
};

/// The criteria catalogue: one row per criterion, grouped by dimension.
const std::vector<CatalogueRow>& catalogue();

struct QualityReport {
    std::vector<Criterion> criteria;               // catalogue order
    std::map<std::string, double> dimension_means;  // over scored criteria
    unsigned seed = 0;
    int link_sample_size = 0;
    std::map<std::string, std::string> config_echo;

    const Criterion* find(const std::string& id) const;
    std::string to_json() const;
    std::string to_text() const;  // table mirroring the criteria-by-dimension layout
};

/// Gold standard for the completeness criteria: pattern classes with their
/// expected properties plus a reference population of labels.
struct GoldPattern {
    std::string name;
    std::string class_iri;
    std::vector<std::string> properties;
};

struct GoldStandard {
    std::vector<GoldPattern> patterns;
    std::vector<std::pair<std::string, std::string>> population;  // (label, external id)

    /// JSON file: {"patterns":[{"name","class","properties":[...]}],
    ///             "population":[{"label","id"}]}
    static GoldStandard load(const std::string& path);
};

/// Literal-validity rule: regex that lexical forms under the predicate must
/// fully match. File format: `<predicate>\t<regex>` per line.
struct LiteralRule {
    std::string predicate;
    std::string regex;
};

std::vector<LiteralRule> load_literal_rules(const std::string& path);

/// Consistency axioms: disjoint class pairs plus domain/range declarations.
/// File lines: `disjoint <A> <B>`, `domain <p> <C>`,
/// `range <p> resource|literal|<C>`.
struct Axioms {
    std::vector<std::pair<std::string, std::string>> disjoint_pairs;
    std::map<std::string, std::string> domains;
    std::map<std::string, std::string> ranges;

    static Axioms load(const std::string& path);
};

/// Reference file for assisted semantic validity: expected property values
/// per resource. JSON: [{"iri": ..., "expect": {predicate: value, ...}}]
struct ReferenceExpectations {
    std::map<std::string, std::map<std::string, std::string>> by_iri;
    static ReferenceExpectations load(const std::string& path);
};

/// HTTP probe seam for the link checker. Returns an HTTP status code, or 0
/// for transport failure/timeout.
class LinkProbe {
public:
    virtual ~LinkProbe() = default;
    virtual int status_of(const std::string& url) = 0;
};

std::unique_ptr<LinkProbe> make_http_probe(int timeout_ms);
/// Scripted stub: `<regex> <status>` lines, first match wins, no match = 0.
std::unique_ptr<LinkProbe> make_scripted_probe(const std::string& script_path);

struct AuditConfig {
    std::string base_uri = "http://example.org/";
    std::vector<std::string> label_predicates;      // defaults applied when empty
    std::vector<std::string> agent_classes;         // defaults applied when empty
    std::vector<LiteralRule> literal_rules;
    Axioms axioms;
    std::vector<std::string> uri_patterns;          // self-describing URI regexes
    std::vector<std::string> formats;               // serialization formats provisioned
    bool license_configured = false;                // publication config carries a license IRI
    bool metadata_configured = false;               // VoID metadata will be emitted
    std::optional<std::string> dataset_modified;    // dataset-level modification date
    std::map<std::string, bool> declared;           // criterion id -> declared assertion
    int link_sample_size = 500;
    unsigned seed = 17;
    bool allow_network = false;
    int concurrency = 4;
    LinkProbe* probe = nullptr;                  // non-owning; nullptr skips NETWORK criteria
    const GoldStandard* gold = nullptr;          // nullptr skips ASSISTED completeness
    const ReferenceExpectations* reference = nullptr;  // nullptr skips semantic validity
};

/// Scores the whole catalogue. AUTOMATIC evaluators always run; NETWORK only
/// with a probe/budget; ASSISTED only with gold/reference inputs; DECLARED
/// from config assertions. Unevaluated criteria stay in the report, marked.
QualityReport evaluate(const rdf::Graph& graph, const AuditConfig& config);

// --- individual evaluators (unit-tested; evaluate() composes them) ---

struct LiteralValidity {
    long long checked = 0;
    long long valid = 0;
    double score = 1.0;
    std::vector<std::string> violations;  // subject, predicate, lexical form
};
LiteralValidity syntactic_validity_literals(const rdf::Graph& graph,
                                            const std::vector<LiteralRule>& rules);

struct DuplicateClusters {
    std::vector<std::vector<std::string>> clusters;  // IRI groups sharing a normalized label
    long long labeled_agents = 0;
    double score = 1.0;  // 1 - clustered/labeled
};
DuplicateClusters detect_duplicate_agents(const rdf::Graph& graph, const AuditConfig& config);

struct ConsistencyViolations {
    std::vector<std::string> class_violations;     // one per offending resource
    std::vector<std::string> relation_violations;  // one per offending triple
    long long typed_resources = 0;
    long long checked_triples = 0;
};
ConsistencyViolations consistency_check(const rdf::Graph& graph, const Axioms& axioms);

struct CompletenessScores {
    double schema = 0;
    double column = 0;
    double population = 0;
    std::vector<std::string> notes;  // excluded pairs, misses
};
CompletenessScores completeness(const rdf::Graph& graph, const GoldStandard& gold);

struct LinkCheckResult {
    long long probed = 0;
    long long ok = 0;
    double rate = 1.0;
    std::vector<std::string> sample;                     // seeded, reproducible
    std::vector<std::pair<std::string, int>> failures;   // url, status (0 = transport)
};
LinkCheckResult check_links(const rdf::Graph& graph, const std::string& base_uri, int sample_size,
                            unsigned seed, LinkProbe& probe, int concurrency = 4);

/// Rate of subjects having at least one triple whose object is an IRI
/// outside the base namespace.
double interlinking_rate(const rdf::Graph& graph, const std::string& base_uri);

const std::vector<std::string>& default_label_predicates();
const std::vector<std::string>& default_agent_classes();

/// Normalization used for duplicate detection and population matching:
/// diacritic fold, case fold, whitespace collapse, terminal punctuation
/// strip; the life-date span is split off and compared separately.
std::string normalize_label(const std::string& label);

}  // namespace lodforge::audit
