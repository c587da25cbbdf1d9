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
#include "lodforge/publish.hpp"

#include <cctype>
#include <ctime>
#include <filesystem>
#include <set>

#include <nlohmann/json.hpp>

#include "lodforge/errors.hpp"
#include "lodforge/fs.hpp"
#include "lodforge/ntriples.hpp"
#include "lodforge/rdfxml.hpp"
#include "lodforge/sha256.hpp"
#include "lodforge/strings.hpp"
#include "lodforge/turtle.hpp"
#include "lodforge/vocab.hpp"

namespace lodforge::publish {

namespace {

namespace stdfs = std::filesystem;
using rdf::Term;

std::string today_utc() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday);
    return buf;
}

/// Local node names keep letters and digits only, preserving case
/// ("Moving Image Archive" -> "MovingImageArchive").
std::string local_node_name(const std::string& value) {
    std::string out;
    for (char c : value) {
        if (std::isalnum(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out.empty() ? "Dataset" : out;
}

Term name_or_iri(const std::string& value, const std::string& base_uri) {
    if (strings::is_absolute_iri(value)) return Term::iri(value);
    return Term::iri(base_uri + local_node_name(value));
}

/// Vocabulary namespaces actually used by the data graph, excluding the
/// structural RDF namespaces and the dataset's own base.
std::vector<std::string> derive_vocabularies(const rdf::Graph& data, const std::string& base_uri) {
    std::set<std::string> out;
    auto note = [&](const std::string& iri) {
        for (const auto& [prefix, ns] : vocab::default_prefixes()) {
            if (ns == vocab::rdf || ns == vocab::rdfs || ns == vocab::xsd || ns == vocab::owl) {
                continue;
            }
            if (strings::starts_with(iri, ns)) {
                out.insert(ns);
                return;
            }
        }
    };
    auto stats = data.stats();
    for (const auto& [predicate, count] : stats.predicate_histogram) {
        if (!strings::starts_with(predicate, base_uri)) note(predicate);
    }
    for (const auto& [class_iri, count] : stats.class_histogram) {
        if (!strings::starts_with(class_iri, base_uri)) note(class_iri);
    }
    return {out.begin(), out.end()};
}

}  // namespace

const std::string& format_name(Format format) {
    static const std::string names[] = {"turtle", "rdfxml", "ntriples"};
    return names[static_cast<int>(format)];
}

const std::string& format_extension(Format format) {
    static const std::string extensions[] = {"ttl", "rdf", "nt"};
    return extensions[static_cast<int>(format)];
}

const std::string& format_feature_iri(Format format) {
    static const std::string features[] = {
        "http://www.w3.org/ns/formats/Turtle",
        "http://www.w3.org/ns/formats/RDF_XML",
        "http://www.w3.org/ns/formats/N-Triples",
    };
    return features[static_cast<int>(format)];
}

std::optional<Format> parse_format(const std::string& name) {
    std::string key = strings::to_lower_ascii(strings::trim(name));
    if (key == "turtle" || key == "ttl") return Format::Turtle;
    if (key == "rdfxml" || key == "rdf-xml" || key == "rdf/xml" || key == "rdf") return Format::RdfXml;
    if (key == "ntriples" || key == "n-triples" || key == "nt") return Format::NTriples;
    return std::nullopt;
}

std::string dump_filename(Format format) { return "dump." + format_extension(format); }

rdf::Graph generate_void(const rdf::Graph& data, const VoidMetadata& metadata,
                         const std::string& base_uri, const std::vector<Format>& formats,
                         const std::string& dump_file) {
    if (metadata.license_iri.empty() || !strings::is_absolute_iri(metadata.license_iri)) {
        throw ConfigError("dataset description requires a license IRI");
    }
    if (metadata.title.empty()) throw ConfigError("dataset description requires a title");

    rdf::Graph g;
    g.prefixes() = {{"", base_uri},
                    {"dcterms", vocab::dcterms},
                    {"void", vocab::void_ns},
                    {"xsd", vocab::xsd}};

    Term dataset = Term::iri(base_uri + local_node_name(metadata.title));
    auto stats = data.stats();

    g.insert(dataset, Term::iri(vocab::rdf_type), Term::iri(vocab::void_ns + "Dataset"));
    g.insert(dataset, Term::iri(vocab::dcterms + "title"), Term::literal(metadata.title));
    if (!metadata.description.empty()) {
        g.insert(dataset, Term::iri(vocab::dcterms + "description"),
                 Term::literal(metadata.description));
    }
    g.insert(dataset, Term::iri(vocab::dcterms + "license"), Term::iri(metadata.license_iri));
    if (!metadata.publisher.empty()) {
        g.insert(dataset, Term::iri(vocab::dcterms + "publisher"),
                 name_or_iri(metadata.publisher, base_uri));
    }
    if (!metadata.contributor.empty()) {
        g.insert(dataset, Term::iri(vocab::dcterms + "contributor"),
                 name_or_iri(metadata.contributor, base_uri));
    }
    for (const auto& source : metadata.sources) {
        g.insert(dataset, Term::iri(vocab::dcterms + "source"), Term::iri(source));
    }
    std::string modified = metadata.modified.value_or(today_utc());
    g.insert(dataset, Term::iri(vocab::dcterms + "modified"),
             strings::is_xsd_date(modified) ? Term::literal(modified, vocab::xsd_date)
                                            : Term::literal(modified));
    for (Format format : formats) {
        g.insert(dataset, Term::iri(vocab::void_ns + "feature"),
                 Term::iri(format_feature_iri(format)));
    }
    std::string dump_base = metadata.dump_base.empty() ? base_uri : metadata.dump_base;
    if (!strings::ends_with(dump_base, "/")) dump_base += "/";
    g.insert(dataset, Term::iri(vocab::void_ns + "dataDump"), Term::iri(dump_base + dump_file));

    std::vector<std::string> vocabularies =
        metadata.vocabularies.empty() ? derive_vocabularies(data, base_uri) : metadata.vocabularies;
    for (const auto& ns : vocabularies) {
        g.insert(dataset, Term::iri(vocab::void_ns + "vocabulary"), Term::iri(ns));
    }

    std::string example = metadata.example_resource;
    if (example.empty()) {
        for (const auto& t : data.triples()) {
            if (t.subject.is_iri()) {
                example = t.subject.value;
                break;
            }
        }
    }
    if (!example.empty()) {
        g.insert(dataset, Term::iri(vocab::void_ns + "exampleResource"), Term::iri(example));
    }

    g.insert(dataset, Term::iri(vocab::void_ns + "classes"),
             Term::literal(std::to_string(stats.class_count), vocab::xsd_integer));
    g.insert(dataset, Term::iri(vocab::void_ns + "properties"),
             Term::literal(std::to_string(stats.property_count), vocab::xsd_integer));
    g.insert(dataset, Term::iri(vocab::void_ns + "triples"),
             Term::literal(std::to_string(static_cast<long long>(data.size())),
                           vocab::xsd_integer));
    return g;
}

DumpManifest write_dump(const rdf::Graph& graph, Format format, const std::string& path) {
    std::string content;
    switch (format) {
        case Format::Turtle: content = rdf::serialize_turtle(graph); break;
        case Format::RdfXml: content = rdf::serialize_rdfxml(graph); break;
        case Format::NTriples: content = rdf::to_ntriples_sorted(graph); break;
    }
    fs::write_file(path, content);
    DumpManifest manifest;
    manifest.path = path;
    manifest.format = format_name(format);
    manifest.bytes = content.size();
    manifest.triples = static_cast<long long>(graph.size());
    manifest.sha256 = sha256_hex(content);
    return manifest;
}

std::vector<DumpManifest> bundle(const BundleInputs& inputs, const std::vector<Format>& formats,
                                 const std::string& out_dir) {
    if (inputs.graph == nullptr) throw ConfigError("bundle requires the dataset graph");
    if (inputs.void_graph == nullptr) throw ConfigError("bundle requires the VoID description");
    if (inputs.quality_json.empty()) throw ConfigError("bundle is missing artifact quality.json");
    if (inputs.quality_text.empty()) throw ConfigError("bundle is missing artifact quality.txt");
    if (inputs.transform_json.empty()) throw ConfigError("bundle is missing artifact transform.json");
    if (formats.empty()) throw ConfigError("bundle requires at least one dump format");

    stdfs::path dir(out_dir);
    bool created = false;
    if (stdfs::exists(dir)) {
        if (!stdfs::is_directory(dir) || !stdfs::is_empty(dir)) {
            throw IoError("bundle directory must be absent or empty", out_dir);
        }
    } else {
        stdfs::create_directories(dir);
        created = true;
    }

    try {
        std::vector<DumpManifest> manifests;
        for (Format format : formats) {
            manifests.push_back(
                write_dump(*inputs.graph, format, (dir / dump_filename(format)).string()));
        }
        fs::write_file((dir / "void.ttl").string(), rdf::serialize_turtle(*inputs.void_graph));
        fs::write_file((dir / "quality.json").string(), inputs.quality_json);
        fs::write_file((dir / "quality.txt").string(), inputs.quality_text);
        fs::write_file((dir / "transform.json").string(), inputs.transform_json);
        return manifests;
    } catch (...) {
        std::error_code ec;
        if (created) {
            stdfs::remove_all(dir, ec);
        } else {
            for (const auto& entry : stdfs::directory_iterator(dir, ec)) {
                stdfs::remove_all(entry.path(), ec);
            }
        }
        throw;
    }
}

std::string manifest_to_json(const std::vector<DumpManifest>& manifests) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& m : manifests) {
        doc.push_back({{"path", m.path},
                       {"format", m.format},
                       {"bytes", m.bytes},
                       {"triples", m.triples},
                       {"sha256", m.sha256}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace lodforge::publish
