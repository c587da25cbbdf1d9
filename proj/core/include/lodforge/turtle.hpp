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

/// Deterministic Turtle: prefix block from the graph's namespace map, then
/// subject-grouped statements in canonical order. xsd:integer literals with
/// canonical lexical forms are written bare.
std::string serialize_turtle(const Graph& graph);

/// Parses the Turtle subset this toolchain emits (@prefix/@base directives,
/// prefixed names, IRIs, literals with language tags and datatypes, numeric
/// shorthand, blank-node labels, `a`, `;`/`,` lists). Errors carry
/// line/column. Collections and anonymous blank nodes are out of scope.
Graph parse_turtle(const std::string& text);

}  // namespace lodforge::rdf
