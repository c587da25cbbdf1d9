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
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lodforge/errors.hpp"
#include "lodforge/pipeline.hpp"

namespace {

using lodforge::pipeline::PipelineConfig;
using lodforge::pipeline::SourceKind;

struct StageFlags {
    std::string config_path;
    std::vector<std::string> inputs;
    std::string source_kind;
    std::string base_uri;
    std::vector<std::string> formats;
    std::string out;
    long long seed = -1;
    int link_sample = 0;
    bool allow_network = false;
    std::string fixture;
    std::string gold;
    std::string accept_file;
    bool auto_accept = false;
    std::string pin_modified;
};

void add_stage_flags(CLI::App* cmd, StageFlags& flags) {
    cmd->add_option("--config", flags.config_path,
                    "Configuration file (JSON); $LODFORGE_CONFIG is the fallback");
    cmd->add_option("--input", flags.inputs, "Input file(s): source dumps or a prior-stage dump");
    cmd->add_option("--source-kind", flags.source_kind, "marcxml or dublin-core");
    cmd->add_option("--base-uri", flags.base_uri, "Base URI for minted entities");
    cmd->add_option("--format", flags.formats, "Dump format (repeatable): turtle, rdfxml, ntriples");
    cmd->add_option("--out", flags.out, "Output directory");
    cmd->add_option("--seed", flags.seed, "Seed for sampled audits");
    cmd->add_option("--link-sample", flags.link_sample, "Link-check sample size");
    cmd->add_flag("--allow-network", flags.allow_network, "Grant the network budget");
    cmd->add_option("--fixture", flags.fixture, "Reconciliation fixture (SPARQL results JSON)");
    cmd->add_option("--gold", flags.gold, "Gold standard file for completeness");
    cmd->add_option("--accept-file", flags.accept_file, "Accepted reconciliation pairs");
    cmd->add_flag("--auto-accept", flags.auto_accept, "Auto-apply score-1.0 candidates");
    cmd->add_option("--pin-modified", flags.pin_modified,
                    "Pin the modified/generation date for reproducible output");
}

PipelineConfig build_config(const StageFlags& flags) {
    std::string config_path = flags.config_path;
    if (config_path.empty()) {
        if (const char* env = std::getenv("LODFORGE_CONFIG"); env != nullptr && *env != '\0') {
            config_path = env;
        }
    }
    PipelineConfig config;
    if (!config_path.empty()) config = PipelineConfig::from_json_file(config_path);

    // flags win over file values
    if (!flags.inputs.empty()) config.inputs = flags.inputs;
    if (!flags.source_kind.empty()) {
        if (flags.source_kind == "marcxml") {
            config.source_kind = SourceKind::MarcXml;
        } else if (flags.source_kind == "dublin-core") {
            config.source_kind = SourceKind::DublinCore;
        } else {
            throw lodforge::ConfigError("--source-kind must be marcxml or dublin-core");
        }
    }
    if (!flags.base_uri.empty()) config.mapping.base_uri = flags.base_uri;
    if (!flags.formats.empty()) {
        config.publish.formats.clear();
        for (const auto& name : flags.formats) {
            auto format = lodforge::publish::parse_format(name);
            if (!format) throw lodforge::ConfigError("unknown format \"" + name + "\"");
            config.publish.formats.push_back(*format);
        }
    }
    if (!flags.out.empty()) config.publish.out_dir = flags.out;
    if (flags.seed >= 0) config.audit.seed = static_cast<unsigned>(flags.seed);
    if (flags.link_sample > 0) config.audit.link_sample = flags.link_sample;
    if (flags.allow_network) config.audit.allow_network = true;
    if (!flags.fixture.empty()) config.enrich.fixture_path = flags.fixture;
    if (!flags.gold.empty()) config.audit.gold_path = flags.gold;
    if (!flags.accept_file.empty()) config.enrich.accept_file = flags.accept_file;
    if (flags.auto_accept) config.enrich.auto_accept = true;
    if (!flags.pin_modified.empty()) {
        config.mapping.pinned_date = flags.pin_modified;
        config.publish.metadata.modified = flags.pin_modified;
    }
    config.validate();
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lodforge: GLAM metadata to Linked Open Data, audited and published"};
    app.require_subcommand(1);

    const std::vector<std::string> stages = {"analyze", "transform", "enrich",
                                             "audit",   "publish",   "pipeline"};
    std::map<std::string, StageFlags> stage_flags;
    for (const auto& stage : stages) {
        auto* cmd = app.add_subcommand(stage);
        add_stage_flags(cmd, stage_flags[stage]);
    }
    app.get_subcommand("analyze")->description("Parse the source dump and emit its profile");
    app.get_subcommand("transform")->description("Transform records to an RDF dump");
    app.get_subcommand("enrich")->description("Reconcile entities and apply owl:sameAs links");
    app.get_subcommand("audit")->description("Score the dump against the quality catalogue");
    app.get_subcommand("publish")->description("Emit the publication bundle");
    app.get_subcommand("pipeline")->description("Run every stage and emit the bundle");

    std::string query_dump, query_file;
    bool query_json = false;
    auto* query_cmd = app.add_subcommand("query", "Evaluate a query file against a dump");
    query_cmd->add_option("dump", query_dump, "RDF dump file")->required();
    query_cmd->add_option("queryfile", query_file, "Query text file")->required();
    query_cmd->add_flag("--json", query_json, "JSON output instead of a text table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (query_cmd->parsed()) {
            return lodforge::pipeline::run_query(query_dump, query_file, query_json, std::cout,
                                                 std::cerr);
        }
        for (const auto& stage : stages) {
            if (app.get_subcommand(stage)->parsed()) {
                PipelineConfig config = build_config(stage_flags[stage]);
                return lodforge::pipeline::run_subcommand(stage, config, std::cout, std::cerr);
            }
        }
    } catch (const lodforge::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return lodforge::pipeline::kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return lodforge::pipeline::kExitFatal;
    }
    return lodforge::pipeline::kExitConfig;
}
