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

#include <optional>
#include <string>
#include <vector>

#include "lodforge/graph.hpp"

namespace lodforge::publish {

enum class Format { Turtle, RdfXml, NTriples };

const std::string& format_name(Format format);       // turtle | rdfxml | ntriples
const std::string& format_extension(Format format);  // ttl | rdf | nt
const std::string& format_feature_iri(Format format);
std::optional<Format> parse_format(const std::string& name);

/// Dataset self-description metadata. Counts are always computed from the
/// graph at emission time, never supplied by hand.
struct VoidMetadata {
    std::string title;
    std::string description;
    std::string license_iri;  // required; emission fails without it
    std::string publisher;    // name or IRI
    std::string contributor;  // name or IRI, optional
    std::vector<std::string> sources;        // IRIs
    std::optional<std::string> modified;     // ISO date; clock when absent
    std::vector<std::string> vocabularies;   // override; derived from the graph when empty
    std::string example_resource;            // IRI; first subject when empty
    std::string dump_base;                   // IRI base for void:dataDump; graph base when empty
};

/// One dataset node carrying title, description, license, publisher,
/// contributor, sources, modified date, features, dataDump, vocabularies,
/// example resource, and the computed class/property/triple counts.
rdf::Graph generate_void(const rdf::Graph& data, const VoidMetadata& metadata,
                         const std::string& base_uri, const std::vector<Format>& formats,
                         const std::string& dump_filename);

struct DumpManifest {
    std::string path;
    std::string format;
    unsigned long long bytes = 0;
    long long triples = 0;
    std::string sha256;
};

/// Serializes the graph to `path`. The digest is stable across reruns for
/// identical graphs.
DumpManifest write_dump(const rdf::Graph& graph, Format format, const std::string& path);

struct BundleInputs {
    const rdf::Graph* graph = nullptr;
    const rdf::Graph* void_graph = nullptr;
    std::string quality_json;
    std::string quality_text;
    std::string transform_json;
};

/// Writes the publication directory: one dump per format plus void.ttl,
/// quality.json, quality.txt, transform.json — nothing else. The directory
/// must be absent or empty; on partial failure it is removed.
std::vector<DumpManifest> bundle(const BundleInputs& inputs, const std::vector<Format>& formats,
                                 const std::string& out_dir);

/// The dump file name used inside bundles for a format.
std::string dump_filename(Format format);

std::string manifest_to_json(const std::vector<DumpManifest>& manifests);

}  // namespace lodforge::publish
