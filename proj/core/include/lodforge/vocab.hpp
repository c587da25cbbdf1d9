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
#include <string>

namespace lodforge::vocab {

inline const std::string rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string xsd = "http://www.w3.org/2001/XMLSchema#";
inline const std::string owl = "http://www.w3.org/2002/07/owl#";
inline const std::string skos = "http://www.w3.org/2004/02/skos/core#";
inline const std::string dc = "http://purl.org/dc/elements/1.1/";
inline const std::string dcterms = "http://purl.org/dc/terms/";
inline const std::string foaf = "http://xmlns.com/foaf/0.1/";
inline const std::string schema = "https://schema.org/";
inline const std::string bf = "http://id.loc.gov/ontologies/bibframe/";
inline const std::string bflc = "http://id.loc.gov/ontologies/bflc/";
inline const std::string edm = "http://www.europeana.eu/schemas/edm/";
inline const std::string void_ns = "http://rdfs.org/ns/void#";
inline const std::string loc_vocabulary = "http://id.loc.gov/vocabulary/";

inline const std::string rdf_type = rdf + "type";
inline const std::string rdf_statement = rdf + "Statement";
inline const std::string rdf_lang_string = rdf + "langString";
inline const std::string rdfs_label = rdfs + "label";
inline const std::string owl_sameas = owl + "sameAs";
inline const std::string xsd_string = xsd + "string";
inline const std::string xsd_integer = xsd + "integer";
inline const std::string xsd_date = xsd + "date";
inline const std::string xsd_gyear = xsd + "gYear";

/// Well-known prefixes used in emitted serializations, prefix -> namespace.
const std::map<std::string, std::string>& default_prefixes();

}  // namespace lodforge::vocab
