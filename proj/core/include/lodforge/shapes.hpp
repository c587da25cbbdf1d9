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
#include <vector>

#include "lodforge/graph.hpp"

namespace lodforge::audit {

/// Object-kind constraint of a property declaration. Literal objects are
/// keyed by datatype, resource objects by the class of the object (its
/// lexicographically first rdf:type); untyped resources fall into AnyIri.
struct ObjectKind {
    enum class Sort { Datatype, ClassMembership, AnyIri };
    Sort sort = Sort::AnyIri;
    std::string iri;

    bool operator==(const ObjectKind&) const = default;
    std::string describe() const;
};

struct PropertyDeclaration {
    std::string predicate;
    ObjectKind object_kind;  // majority kind over the class's instances
    bool required = false;   // support >= mining threshold
    double support = 0;      // instances carrying the predicate with this kind / instances
};

struct Shape {
    std::string target_class;
    long long instance_count = 0;
    std::vector<PropertyDeclaration> properties;
};

struct ShapeSet {
    std::vector<Shape> shapes;
};

/// Mines one shape per class with at least one instance. A predicate is
/// required when the support of its majority object kind reaches the
/// threshold, optional when it reaches the floor; below that it is dropped.
ShapeSet mine_shapes(const rdf::Graph& graph, double threshold, double floor = 0.05);

struct NodeConformance {
    std::string node;
    std::string shape_class;
    bool conforms = true;
    std::vector<std::string> violations;  // violated declarations, described
};

struct ConformanceReport {
    std::vector<NodeConformance> nodes;
    long long conforming = 0;
    long long checked = 0;
    std::vector<std::string> warnings;  // shapes skipped for unknown classes

    double conformance_rate() const {
        return checked == 0 ? 1.0 : static_cast<double>(conforming) / static_cast<double>(checked);
    }
};

/// A node conforms when every required declaration of its class's shape is
/// satisfied with the declared object kind.
ConformanceReport validate_shapes(const rdf::Graph& graph, const ShapeSet& shapes);

/// ShEx-style rendering for documentation output.
std::string to_shex_text(const ShapeSet& shapes, const rdf::Graph& graph);

}  // namespace lodforge::audit
