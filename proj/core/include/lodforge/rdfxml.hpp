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

#include <string>

#include "lodforge/graph.hpp"

namespace lodforge::rdf {

/// Deterministic RDF/XML: one rdf:Description per subject in canonical
/// order with the graph's namespace map declared on the root element.
/// Predicate IRIs must split into a namespace plus an XML NCName local part.
std::string serialize_rdfxml(const Graph& graph);

/// Parses the RDF/XML subset this toolchain emits plus typed node elements.
/// Nested descriptions, rdf:parseType and containers are out of scope.
Graph parse_rdfxml(const std::string& text);

}  // namespace lodforge::rdf
