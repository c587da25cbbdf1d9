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

/// Sorted N-Triples export with source blank-node labels.
std::string to_ntriples_sorted(const Graph& graph);

/// Sorted N-Triples export after deterministic blank-node canonicalization:
/// two graphs are isomorphic iff their canonical exports are byte-equal.
std::string to_ntriples_canonical(const Graph& graph);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace lodforge::rdf
