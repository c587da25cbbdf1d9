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
#include "lodforge/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "lodforge/audit.hpp"
#include "lodforge/enrich.hpp"
#include "lodforge/errors.hpp"
#include "lodforge/fs.hpp"
#include "lodforge/ntriples.hpp"
#include "lodforge/profile.hpp"
#include "lodforge/query.hpp"
#include "lodforge/rdfxml.hpp"
#include "lodforge/strings.hpp"
#include "lodforge/turtle.hpp"

namespace lodforge::pipeline {

namespace {

namespace stdfs = std::filesystem;
using nlohmann::json;

void reject_unknown_keys(const json& object, const std::vector<std::string>& known,
                         const std::string& where) {
    for (const auto& [key, value] : object.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ConfigError("unknown configuration key \"" + key + "\" in " + where);
        }
    }
}

std::string get_string(const json& object, const std::string& key, const std::string& fallback) {
    if (!object.contains(key)) return fallback;
    if (!object[key].is_string()) throw ConfigError("configuration key \"" + key + "\" must be a string");
    return object[key].get<std::string>();
}

void parse_mapping(const json& object, mapping::MappingConfig& config) {
    reject_unknown_keys(object,
                        {"base_uri", "id_field", "serialization", "ordinal_counts_control_fields",
                         "synthesize_missing_ids", "source_note", "pinned_date", "marc_ruleset",
                         "dc_ruleset", "dc_url_patterns"},
                        "mapping");
    config.base_uri = get_string(object, "base_uri", config.base_uri);
    config.id_field = get_string(object, "id_field", config.id_field);
    std::string serialization = get_string(object, "serialization", "");
    if (!serialization.empty()) {
        if (serialization == "turtle") {
            config.serialization = mapping::Serialization::Turtle;
        } else if (serialization == "rdfxml") {
            config.serialization = mapping::Serialization::RdfXml;
        } else {
            throw ConfigError("mapping.serialization must be turtle or rdfxml");
        }
    }
    if (object.contains("ordinal_counts_control_fields")) {
        config.ordinal_counts_control_fields = object["ordinal_counts_control_fields"].get<bool>();
    }
    if (object.contains("synthesize_missing_ids")) {
        config.synthesize_missing_ids = object["synthesize_missing_ids"].get<bool>();
    }
    config.source_note = get_string(object, "source_note", config.source_note);
    std::string pinned = get_string(object, "pinned_date", "");
    if (!pinned.empty()) config.pinned_date = pinned;
    config.marc_ruleset_path = get_string(object, "marc_ruleset", config.marc_ruleset_path);
    config.dc_ruleset_path = get_string(object, "dc_ruleset", config.dc_ruleset_path);
    if (object.contains("dc_url_patterns")) {
        for (const auto& [kind, tmpl] : object["dc_url_patterns"].items()) {
            config.dc_url_patterns[kind] = tmpl.get<std::string>();
        }
    }
}

void parse_enrich(const json& object, EnrichSettings& settings) {
    reject_unknown_keys(object,
                        {"endpoint", "fixture", "accept_file", "auto_accept", "concurrency",
                         "timeout_ms", "floor", "entity_kind"},
                        "enrich");
    settings.endpoint_url = get_string(object, "endpoint", settings.endpoint_url);
    settings.fixture_path = get_string(object, "fixture", settings.fixture_path);
    settings.accept_file = get_string(object, "accept_file", settings.accept_file);
    if (object.contains("auto_accept")) settings.auto_accept = object["auto_accept"].get<bool>();
    if (object.contains("concurrency")) settings.concurrency = object["concurrency"].get<int>();
    if (object.contains("timeout_ms")) settings.timeout_ms = object["timeout_ms"].get<int>();
    if (object.contains("floor")) settings.floor = object["floor"].get<double>();
    settings.entity_kind = get_string(object, "entity_kind", settings.entity_kind);
}

void parse_audit(const json& object, AuditSettings& settings) {
    reject_unknown_keys(object,
                        {"gold", "reference", "link_script", "link_sample", "seed", "allow_network",
                         "concurrency", "literal_rules", "axioms", "declared"},
                        "audit");
    settings.gold_path = get_string(object, "gold", settings.gold_path);
    settings.reference_path = get_string(object, "reference", settings.reference_path);
    settings.link_script = get_string(object, "link_script", settings.link_script);
    if (object.contains("link_sample")) settings.link_sample = object["link_sample"].get<int>();
    if (object.contains("seed")) settings.seed = object["seed"].get<unsigned>();
    if (object.contains("allow_network")) settings.allow_network = object["allow_network"].get<bool>();
    if (object.contains("concurrency")) settings.concurrency = object["concurrency"].get<int>();
    settings.literal_rules_path = get_string(object, "literal_rules", settings.literal_rules_path);
    settings.axioms_path = get_string(object, "axioms", settings.axioms_path);
    if (object.contains("declared")) {
        for (const auto& [key, value] : object["declared"].items()) {
            settings.declared[key] = value.get<bool>();
        }
    }
}

void parse_publish(const json& object, PublishSettings& settings) {
    reject_unknown_keys(object,
                        {"out", "formats", "metadata", "quality_json", "quality_txt",
                         "transform_json"},
                        "publish");
    settings.out_dir = get_string(object, "out", settings.out_dir);
    if (object.contains("formats")) {
        settings.formats.clear();
        for (const auto& name : object["formats"]) {
            auto format = publish::parse_format(name.get<std::string>());
            if (!format) throw ConfigError("unknown dump format \"" + name.get<std::string>() + "\"");
            settings.formats.push_back(*format);
        }
    }
    settings.quality_json_path = get_string(object, "quality_json", settings.quality_json_path);
    settings.quality_text_path = get_string(object, "quality_txt", settings.quality_text_path);
    settings.transform_json_path =
        get_string(object, "transform_json", settings.transform_json_path);
    if (object.contains("metadata")) {
        const json& metadata = object["metadata"];
        reject_unknown_keys(metadata,
                            {"title", "description", "license", "publisher", "contributor",
                             "sources", "modified", "vocabularies", "example_resource", "dump_base"},
                            "publish.metadata");
        auto& m = settings.metadata;
        m.title = get_string(metadata, "title", m.title);
        m.description = get_string(metadata, "description", m.description);
        m.license_iri = get_string(metadata, "license", m.license_iri);
        m.publisher = get_string(metadata, "publisher", m.publisher);
        m.contributor = get_string(metadata, "contributor", m.contributor);
        if (metadata.contains("sources")) {
            m.sources.clear();
            for (const auto& source : metadata["sources"]) m.sources.push_back(source.get<std::string>());
        }
        std::string modified = get_string(metadata, "modified", "");
        if (!modified.empty()) m.modified = modified;
        if (metadata.contains("vocabularies")) {
            m.vocabularies.clear();
            for (const auto& v : metadata["vocabularies"]) m.vocabularies.push_back(v.get<std::string>());
        }
        m.example_resource = get_string(metadata, "example_resource", m.example_resource);
        m.dump_base = get_string(metadata, "dump_base", m.dump_base);
    }
}

void parse_vocab(const json& object, VocabPaths& paths) {
    reject_unknown_keys(object, {"languages", "geographic_areas", "relators"}, "vocab");
    paths.languages = get_string(object, "languages", paths.languages);
    paths.geographic_areas = get_string(object, "geographic_areas", paths.geographic_areas);
    paths.relators = get_string(object, "relators", paths.relators);
}

enrich::Vocabularies load_vocabularies(const PipelineConfig& config) {
    if (config.vocab.languages.empty() && config.vocab.geographic_areas.empty()
        && config.vocab.relators.empty()) {
        return enrich::Vocabularies::load_defaults();
    }
    std::string languages = config.vocab.languages.empty()
                                ? fs::data_file("vocabulary/languages.tsv")
                                : config.vocab.languages;
    std::string geo = config.vocab.geographic_areas.empty()
                          ? fs::data_file("vocabulary/geographic_areas.tsv")
                          : config.vocab.geographic_areas;
    std::string relators = config.vocab.relators.empty()
                               ? fs::data_file("vocabulary/relators.tsv")
                               : config.vocab.relators;
    return enrich::Vocabularies::load(languages, geo, relators);
}

struct Records {
    std::vector<marc::Record> marc;
    std::vector<dc::Record> dc;
    long long parse_skipped = 0;
};

Records read_records(const PipelineConfig& config) {
    if (config.inputs.empty()) throw ConfigError("no input files configured");
    Records records;
    for (const auto& path : config.inputs) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open input", path);
        if (config.source_kind == SourceKind::MarcXml) {
            marc::ParseOptions options;
            options.ordinal_counts_control_fields = config.mapping.ordinal_counts_control_fields;
            marc::Reader reader(in, options);
            while (auto record = reader.next()) records.marc.push_back(std::move(*record));
            records.parse_skipped += reader.records_skipped();
        } else {
            dc::ParseOptions options;
            options.container = config.dc_container;
            dc::Reader reader(in, options);
            while (auto record = reader.next()) records.dc.push_back(std::move(*record));
        }
    }
    return records;
}

std::string require_out_dir(const PipelineConfig& config) {
    if (config.publish.out_dir.empty()) {
        throw ConfigError("this stage requires an output directory (--out)");
    }
    stdfs::create_directories(config.publish.out_dir);
    return config.publish.out_dir;
}

std::string dump_path_for(const PipelineConfig& config, const std::string& dir) {
    return (stdfs::path(dir) / publish::dump_filename(config.publish.formats.front())).string();
}

mapping::Transformer::DumpResult transform_records(const PipelineConfig& config,
                                                   const enrich::Vocabularies& vocabularies,
                                                   const Records& records) {
    mapping::Transformer transformer(config.mapping, &vocabularies);
    auto result = config.source_kind == SourceKind::MarcXml ? transformer.transform_dump(records.marc)
                                                            : transformer.transform_dump(records.dc);
    result.report.records_skipped += records.parse_skipped;
    result.report.records_processed += records.parse_skipped;
    return result;
}

std::unique_ptr<enrich::EndpointClient> make_enrich_client(const PipelineConfig& config) {
    if (!config.enrich.fixture_path.empty()) {
        return enrich::make_fixture_client(config.enrich.fixture_path);
    }
    if (!config.enrich.endpoint_url.empty()) {
        return enrich::make_http_client(config.enrich.endpoint_url, config.enrich.timeout_ms);
    }
    return nullptr;
}

struct EnrichOutcome {
    enrich::ReconcileOutcome reconciliation;
    long long applied = 0;
};

EnrichOutcome run_enrichment(const PipelineConfig& config, rdf::Graph& graph,
                             enrich::EndpointClient& client) {
    enrich::ReconcileOptions options;
    options.entity_kind = config.enrich.entity_kind;
    options.floor = config.enrich.floor;
    options.concurrency = config.enrich.concurrency;
    EnrichOutcome outcome;
    outcome.reconciliation = enrich::reconcile(graph, client, options);

    std::vector<enrich::AcceptedLink> accepted;
    if (config.enrich.auto_accept) {
        for (const auto& candidate : outcome.reconciliation.candidates) {
            if (candidate.score >= 1.0 - 1e-9) {
                accepted.push_back({candidate.subject_iri, candidate.external_iri});
            }
        }
    }
    if (!config.enrich.accept_file.empty()) {
        for (auto& link : enrich::load_acceptance_file(config.enrich.accept_file)) {
            accepted.push_back(std::move(link));
        }
    }
    enrich::apply_sameas(graph, accepted);
    outcome.applied = static_cast<long long>(accepted.size());
    return outcome;
}

audit::QualityReport run_audit(const PipelineConfig& config, const rdf::Graph& graph,
                               const audit::GoldStandard* gold,
                               const audit::ReferenceExpectations* reference,
                               audit::LinkProbe* probe) {
    audit::AuditConfig audit_config;
    audit_config.base_uri = config.mapping.base_uri;
    audit_config.literal_rules = audit::load_literal_rules(
        config.audit.literal_rules_path.empty() ? fs::data_file("audit/literal_rules.tsv")
                                                : config.audit.literal_rules_path);
    audit_config.axioms = audit::Axioms::load(config.audit.axioms_path.empty()
                                                  ? fs::data_file("audit/axioms.tsv")
                                                  : config.audit.axioms_path);
    audit_config.uri_patterns = mapping::subject_uri_patterns(config.mapping);
    for (auto format : config.publish.formats) {
        audit_config.formats.push_back(publish::format_name(format));
    }
    audit_config.license_configured = !config.publish.metadata.license_iri.empty();
    audit_config.metadata_configured = !config.publish.metadata.title.empty();
    audit_config.dataset_modified = config.publish.metadata.modified;
    audit_config.declared = config.audit.declared;
    audit_config.link_sample_size = config.audit.link_sample;
    audit_config.seed = config.audit.seed;
    audit_config.allow_network = config.audit.allow_network;
    audit_config.concurrency = config.audit.concurrency;
    audit_config.probe = probe;
    audit_config.gold = gold;
    audit_config.reference = reference;
    return audit::evaluate(graph, audit_config);
}

std::unique_ptr<audit::LinkProbe> make_probe(const PipelineConfig& config) {
    if (!config.audit.link_script.empty()) {
        return audit::make_scripted_probe(config.audit.link_script);
    }
    if (config.audit.allow_network) return audit::make_http_probe(10000);
    return nullptr;
}

int stage_analyze(const PipelineConfig& config, std::ostream& out) {
    Records records = read_records(config);
    ingest::ProfileBuilder builder;
    for (const auto& r : records.marc) builder.add(r);
    for (const auto& r : records.dc) builder.add(r);
    std::string profile_json = ingest::to_json(builder.finish(config.profile_top_k));
    if (config.publish.out_dir.empty()) {
        out << profile_json;
    } else {
        std::string dir = require_out_dir(config);
        fs::write_file((stdfs::path(dir) / "profile.json").string(), profile_json);
    }
    return kExitOk;
}

int stage_transform(const PipelineConfig& config) {
    std::string dir = require_out_dir(config);
    auto vocabularies = load_vocabularies(config);
    Records records = read_records(config);
    auto result = transform_records(config, vocabularies, records);
    publish::write_dump(result.graph, config.publish.formats.front(), dump_path_for(config, dir));
    fs::write_file((stdfs::path(dir) / "transform.json").string(), result.report.to_json());
    return result.report.records_skipped > 0 ? kExitRecordErrors : kExitOk;
}

int stage_enrich(const PipelineConfig& config) {
    std::string dir = require_out_dir(config);
    if (config.inputs.empty()) throw ConfigError("enrich requires an --input dump file");
    rdf::Graph graph = load_dump(config.inputs.front());
    auto client = make_enrich_client(config);
    if (client == nullptr) {
        throw ConfigError("enrich requires a reconciliation endpoint or fixture");
    }
    EnrichOutcome outcome = run_enrichment(config, graph, *client);
    publish::write_dump(graph, config.publish.formats.front(), dump_path_for(config, dir));
    fs::write_file((stdfs::path(dir) / "candidates.json").string(),
                   enrich::candidates_to_json(outcome.reconciliation));
    return kExitOk;
}

int stage_audit(const PipelineConfig& config) {
    std::string dir = require_out_dir(config);
    if (config.inputs.empty()) throw ConfigError("audit requires an --input dump file");
    rdf::Graph graph = load_dump(config.inputs.front());

    std::optional<audit::GoldStandard> gold;
    if (!config.audit.gold_path.empty()) gold = audit::GoldStandard::load(config.audit.gold_path);
    std::optional<audit::ReferenceExpectations> reference;
    if (!config.audit.reference_path.empty()) {
        reference = audit::ReferenceExpectations::load(config.audit.reference_path);
    }
    auto probe = make_probe(config);
    auto report = run_audit(config, graph, gold ? &*gold : nullptr,
                            reference ? &*reference : nullptr, probe.get());
    fs::write_file((stdfs::path(dir) / "quality.json").string(), report.to_json());
    fs::write_file((stdfs::path(dir) / "quality.txt").string(), report.to_text());
    return kExitOk;
}

int stage_publish(const PipelineConfig& config) {
    if (config.publish.out_dir.empty()) throw ConfigError("publish requires --out");
    if (config.inputs.empty()) throw ConfigError("publish requires an --input dump file");
    if (config.publish.quality_json_path.empty() || config.publish.quality_text_path.empty()
        || config.publish.transform_json_path.empty()) {
        throw ConfigError(
            "publish requires publish.quality_json, publish.quality_txt and "
            "publish.transform_json from the prior stages");
    }
    rdf::Graph graph = load_dump(config.inputs.front());
    rdf::Graph void_graph = publish::generate_void(
        graph, config.publish.metadata, config.mapping.base_uri, config.publish.formats,
        publish::dump_filename(config.publish.formats.front()));
    publish::BundleInputs inputs;
    inputs.graph = &graph;
    inputs.void_graph = &void_graph;
    inputs.quality_json = fs::read_file(config.publish.quality_json_path);
    inputs.quality_text = fs::read_file(config.publish.quality_text_path);
    inputs.transform_json = fs::read_file(config.publish.transform_json_path);
    publish::bundle(inputs, config.publish.formats, config.publish.out_dir);
    return kExitOk;
}

int stage_pipeline(const PipelineConfig& config) {
    if (config.publish.out_dir.empty()) throw ConfigError("pipeline requires --out");
    auto vocabularies = load_vocabularies(config);
    Records records = read_records(config);
    auto result = transform_records(config, vocabularies, records);

    if (auto client = make_enrich_client(config)) {
        run_enrichment(config, result.graph, *client);
    }

    std::optional<audit::GoldStandard> gold;
    if (!config.audit.gold_path.empty()) gold = audit::GoldStandard::load(config.audit.gold_path);
    std::optional<audit::ReferenceExpectations> reference;
    if (!config.audit.reference_path.empty()) {
        reference = audit::ReferenceExpectations::load(config.audit.reference_path);
    }
    auto probe = make_probe(config);
    auto report = run_audit(config, result.graph, gold ? &*gold : nullptr,
                            reference ? &*reference : nullptr, probe.get());

    rdf::Graph void_graph = publish::generate_void(
        result.graph, config.publish.metadata, config.mapping.base_uri, config.publish.formats,
        publish::dump_filename(config.publish.formats.front()));

    publish::BundleInputs inputs;
    inputs.graph = &result.graph;
    inputs.void_graph = &void_graph;
    inputs.quality_json = report.to_json();
    inputs.quality_text = report.to_text();
    inputs.transform_json = result.report.to_json();
    publish::bundle(inputs, config.publish.formats, config.publish.out_dir);
    return result.report.records_skipped > 0 ? kExitRecordErrors : kExitOk;
}

}  // namespace

PipelineConfig PipelineConfig::from_json_file(const std::string& path) {
    return from_json_text(fs::read_file(path), path);
}

PipelineConfig PipelineConfig::from_json_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(origin + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw ConfigError(origin + ": configuration must be a JSON object");
    reject_unknown_keys(doc,
                        {"inputs", "source_kind", "profile_top_k", "dc_container", "mapping",
                         "enrich", "audit", "publish", "vocab"},
                        "configuration root");
    PipelineConfig config;
    if (doc.contains("inputs")) {
        for (const auto& input : doc["inputs"]) config.inputs.push_back(input.get<std::string>());
    }
    std::string kind = get_string(doc, "source_kind", "marcxml");
    if (kind == "marcxml") {
        config.source_kind = SourceKind::MarcXml;
    } else if (kind == "dublin-core") {
        config.source_kind = SourceKind::DublinCore;
    } else {
        throw ConfigError("source_kind must be marcxml or dublin-core");
    }
    if (doc.contains("profile_top_k")) config.profile_top_k = doc["profile_top_k"].get<int>();
    config.dc_container = get_string(doc, "dc_container", config.dc_container);
    if (doc.contains("mapping")) parse_mapping(doc["mapping"], config.mapping);
    if (doc.contains("enrich")) parse_enrich(doc["enrich"], config.enrich);
    if (doc.contains("audit")) parse_audit(doc["audit"], config.audit);
    if (doc.contains("publish")) parse_publish(doc["publish"], config.publish);
    if (doc.contains("vocab")) parse_vocab(doc["vocab"], config.vocab);
    config.validate();
    return config;
}

void PipelineConfig::validate() const {
    mapping.validate();
    if (profile_top_k < 1) throw ConfigError("profile_top_k must be >= 1");
    if (publish.formats.empty()) throw ConfigError("at least one publish format is required");
    if (audit.link_sample < 1) throw ConfigError("audit.link_sample must be >= 1");
    if (enrich.floor < 0 || enrich.floor > 1) throw ConfigError("enrich.floor must be in [0,1]");
}

rdf::Graph load_dump(const std::string& path) {
    std::string text = fs::read_file(path);
    if (strings::ends_with(path, ".rdf") || strings::ends_with(path, ".xml")) {
        return rdf::parse_rdfxml(text);
    }
    // Turtle covers .ttl and .nt (N-Triples is a Turtle subset)
    return rdf::parse_turtle(text);
}

int run_subcommand(const std::string& name, const PipelineConfig& config, std::ostream& out,
                   std::ostream& err) {
    try {
        if (name == "analyze") return stage_analyze(config, out);
        if (name == "transform") return stage_transform(config);
        if (name == "enrich") return stage_enrich(config);
        if (name == "audit") return stage_audit(config);
        if (name == "publish") return stage_publish(config);
        if (name == "pipeline") return stage_pipeline(config);
        err << "unknown subcommand: " << name << "\n";
        return kExitConfig;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFatal;
    }
}

int run_query(const std::string& dump_path, const std::string& query_path, bool as_json,
              std::ostream& out, std::ostream& err) {
    try {
        rdf::Graph graph = load_dump(dump_path);
        rdf::Query query = rdf::parse_query(fs::read_file(query_path));
        rdf::ResultTable table = rdf::match(graph, query);
        out << (as_json ? rdf::to_json(table) : rdf::to_text(table));
        return kExitOk;
    } catch (const QueryError& e) {
        err << "query error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFatal;
    }
}

}  // namespace lodforge::pipeline
