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
#include <optional>
#include <string>
#include <vector>

#include "lodforge/dublin_core.hpp"
#include "lodforge/enrich.hpp"
#include "lodforge/graph.hpp"
#include "lodforge/marc.hpp"
#include "lodforge/ruleset.hpp"

namespace lodforge::mapping {

/// Entity kinds with minting rules. Work and Instance hang directly off the
/// record hash; every other kind appends the source field tag and ordinal.
enum class UriKind {
    Work,
    Instance,
    Hub,
    Agent,
    Topic,
    Place,
    Contribution,
    AdminMetadata,
    Title,
    Item,
    ProvisionActivity,
};

const std::string& kind_name(UriKind kind);

enum class Serialization { Turtle, RdfXml };

struct MappingConfig {
    std::string base_uri = "http://example.org/";
    std::string id_field = "001";
    Serialization serialization = Serialization::Turtle;
    std::map<std::string, std::string> dc_url_patterns;  // entity kind -> path template
    bool ordinal_counts_control_fields = true;
    bool synthesize_missing_ids = false;
    std::string source_note = "lodforge";          // admin-metadata source
    std::optional<std::string> pinned_date;        // generation date for reproducible output
    std::string marc_ruleset_path;                 // empty: shipped default
    std::string dc_ruleset_path;

    MappingConfig();
    void validate() const;
};

struct TransformReport {
    long long records_processed = 0;
    long long records_emitted = 0;
    long long records_skipped = 0;
    std::map<std::string, long long> warnings;  // category -> count
    std::vector<std::string> messages;          // first occurrences, capped

    void warn(const std::string& category, const std::string& message);
    std::string to_json() const;
};

/// Mints an entity IRI. Work/Instance take no field context; every other
/// kind requires the source field tag and ordinal. Identifier characters
/// outside the IRI path repertoire are percent-encoded (warned via report).
std::string mint_uri(const MappingConfig& config, UriKind kind, const std::string& record_id,
                     const std::string& field_tag = {}, int ordinal = 0,
                     TransformReport* report = nullptr);

/// Regexes every emitted subject IRI must match; used by the audit.
std::vector<std::string> subject_uri_patterns(const MappingConfig& config);

/// Record-to-graph transformation engines for the two profiles.
class Transformer {
public:
    Transformer(MappingConfig config, const enrich::Vocabularies* vocabularies);

    /// One Work + one Instance plus satellite nodes per the rule set;
    /// nullopt when the record lacks the configured identifier.
    std::optional<rdf::Graph> transform_marc_record(const marc::Record& record,
                                                    TransformReport& report) const;

    /// Pattern-URL entity graph for one DC record; nullopt without an
    /// identifier (unless synthesis is enabled).
    std::optional<rdf::Graph> transform_dc_record(const dc::Record& record,
                                                  TransformReport& report) const;

    struct DumpResult {
        rdf::Graph graph;
        TransformReport report;
    };
    DumpResult transform_dump(const std::vector<marc::Record>& records) const;
    DumpResult transform_dump(const std::vector<dc::Record>& records) const;

    const MappingConfig& config() const { return config_; }
    const RuleSet& marc_rules() const { return marc_rules_; }
    const RuleSet& dc_rules() const { return dc_rules_; }

private:
    void apply_marc_rule(rdf::Graph& g, const Rule& rule, const marc::Record& record,
                         const marc::DataField& field, const rdf::Term& work,
                         const rdf::Term& instance, const std::string& id,
                         const std::optional<rdf::Term>& primary_agent,
                         TransformReport& report) const;

    MappingConfig config_;
    const enrich::Vocabularies* vocabularies_;
    RuleSet marc_rules_;
    RuleSet dc_rules_;
};

}  // namespace lodforge::mapping
