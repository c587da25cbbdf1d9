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

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lodforge/mapping.hpp"
#include "lodforge/publish.hpp"

namespace lodforge::pipeline {

enum class SourceKind { MarcXml, DublinCore };

struct EnrichSettings {
    std::string endpoint_url;
    std::string fixture_path;
    std::string accept_file;
    bool auto_accept = false;  // auto-apply score-1.0 candidates
    int concurrency = 4;
    int timeout_ms = 10000;
    double floor = 0.4;
    std::string entity_kind = "agent";
};

struct AuditSettings {
    std::string gold_path;
    std::string reference_path;
    std::string link_script;  // scripted probe for offline runs
    int link_sample = 500;
    unsigned seed = 17;
    bool allow_network = false;
    int concurrency = 4;
    std::map<std::string, bool> declared;
    std::string literal_rules_path;  // empty: shipped default
    std::string axioms_path;         // empty: shipped default
};

struct PublishSettings {
    std::string out_dir;
    std::vector<publish::Format> formats{publish::Format::Turtle};
    publish::VoidMetadata metadata;
    // prior-stage artifacts consumed by the standalone publish stage
    std::string quality_json_path;
    std::string quality_text_path;
    std::string transform_json_path;
};

struct VocabPaths {
    std::string languages;
    std::string geographic_areas;
    std::string relators;
};

/// Full configuration surface. Loaded from a JSON document; unknown keys are
/// rejected. CLI flags override file values.
struct PipelineConfig {
    std::vector<std::string> inputs;
    SourceKind source_kind = SourceKind::MarcXml;
    int profile_top_k = 10;
    std::string dc_container = "dc";  // per-record container element (local name)
    mapping::MappingConfig mapping;
    EnrichSettings enrich;
    AuditSettings audit;
    PublishSettings publish;
    VocabPaths vocab;

    static PipelineConfig from_json_file(const std::string& path);
    static PipelineConfig from_json_text(const std::string& text, const std::string& origin);
    void validate() const;
};

/// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFatal = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRecordErrors = 3;

/// Runs one of: analyze, transform, enrich, audit, publish, pipeline.
/// Stage artifacts land in publish.out_dir (stdout for analyze when unset).
int run_subcommand(const std::string& name, const PipelineConfig& config, std::ostream& out,
                   std::ostream& err);

/// Evaluates a query file against a dump.
int run_query(const std::string& dump_path, const std::string& query_path, bool as_json,
              std::ostream& out, std::ostream& err);

/// Loads a dump by extension (.ttl/.rdf/.nt, optionally .gz is not supported
/// here; dumps are plain text).
rdf::Graph load_dump(const std::string& path);

}  // namespace lodforge::pipeline
