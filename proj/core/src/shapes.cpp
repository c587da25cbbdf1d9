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
#include "lodforge/shapes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lodforge/errors.hpp"
#include "lodforge/vocab.hpp"

namespace lodforge::audit {

namespace {

ObjectKind kind_of(const rdf::Graph& graph, const rdf::Term& object) {
    if (object.is_literal()) {
        ObjectKind kind;
        kind.sort = ObjectKind::Sort::Datatype;
        if (!object.lang.empty()) {
            kind.iri = vocab::rdf_lang_string;
        } else if (!object.datatype.empty()) {
            kind.iri = object.datatype;
        } else {
            kind.iri = vocab::xsd_string;
        }
        return kind;
    }
    auto types = graph.types_of(object);
    if (types.empty()) return {ObjectKind::Sort::AnyIri, ""};
    std::sort(types.begin(), types.end());
    return {ObjectKind::Sort::ClassMembership, types.front()};
}

std::string kind_key(const ObjectKind& kind) {
    switch (kind.sort) {
        case ObjectKind::Sort::Datatype: return "D" + kind.iri;
        case ObjectKind::Sort::ClassMembership: return "C" + kind.iri;
        case ObjectKind::Sort::AnyIri: return "A";
    }
    return "A";
}

}  // namespace

std::string ObjectKind::describe() const {
    switch (sort) {
        case Sort::Datatype: return "literal ^^<" + iri + ">";
        case Sort::ClassMembership: return "resource of class <" + iri + ">";
        case Sort::AnyIri: return "IRI";
    }
    return "IRI";
}

ShapeSet mine_shapes(const rdf::Graph& graph, double threshold, double floor) {
    if (threshold <= 0 || threshold > 1) {
        throw ConfigError("shape mining threshold must be in (0,1]");
    }
    ShapeSet set;
    auto stats = graph.stats();
    for (const auto& [class_iri, count] : stats.class_histogram) {
        auto instances = graph.instances_of(class_iri);
        if (instances.empty()) continue;

        // predicate -> kind key -> set of instances carrying it with that kind
        std::map<std::string, std::map<std::string, std::pair<ObjectKind, std::set<std::string>>>>
            observations;
        for (const auto& instance : instances) {
            graph.scan(instance, std::nullopt, std::nullopt, [&](const rdf::Triple& t) {
                ObjectKind kind = kind_of(graph, t.object);
                auto& slot = observations[t.predicate.value][kind_key(kind)];
                slot.first = kind;
                slot.second.insert(rdf::to_ntriples(t.subject));
            });
        }

        Shape shape;
        shape.target_class = class_iri;
        shape.instance_count = static_cast<long long>(instances.size());
        for (const auto& [predicate, kinds] : observations) {
            // majority kind: most carrying instances, tie-broken by key
            const ObjectKind* majority = nullptr;
            size_t best = 0;
            std::string best_key;
            for (const auto& [key, slot] : kinds) {
                if (slot.second.size() > best || (slot.second.size() == best && key < best_key)) {
                    best = slot.second.size();
                    best_key = key;
                    majority = &slot.first;
                }
            }
            double support = static_cast<double>(best) / static_cast<double>(instances.size());
            PropertyDeclaration decl;
            decl.predicate = predicate;
            decl.object_kind = *majority;
            decl.support = support;
            decl.required = support + 1e-12 >= threshold;
            if (decl.required || support + 1e-12 >= floor) shape.properties.push_back(decl);
        }
        std::sort(shape.properties.begin(), shape.properties.end(),
                  [](const PropertyDeclaration& a, const PropertyDeclaration& b) {
                      return a.predicate < b.predicate;
                  });
        set.shapes.push_back(std::move(shape));
    }
    return set;
}

ConformanceReport validate_shapes(const rdf::Graph& graph, const ShapeSet& shapes) {
    ConformanceReport report;
    for (const auto& shape : shapes.shapes) {
        auto instances = graph.instances_of(shape.target_class);
        if (instances.empty()) {
            report.warnings.push_back("shape for unknown class skipped: " + shape.target_class);
            continue;
        }
        for (const auto& instance : instances) {
            NodeConformance nc;
            nc.node = rdf::to_ntriples(instance);
            nc.shape_class = shape.target_class;
            for (const auto& decl : shape.properties) {
                if (!decl.required) continue;
                bool satisfied = false;
                graph.scan(instance, rdf::Term::iri(decl.predicate), std::nullopt,
                           [&](const rdf::Triple& t) {
                               if (satisfied) return;
                               if (kind_of(graph, t.object) == decl.object_kind) satisfied = true;
                           });
                if (!satisfied) {
                    nc.conforms = false;
                    nc.violations.push_back("missing required <" + decl.predicate + "> with "
                                            + decl.object_kind.describe());
                }
            }
            ++report.checked;
            if (nc.conforms) ++report.conforming;
            report.nodes.push_back(std::move(nc));
        }
    }
    return report;
}

std::string to_shex_text(const ShapeSet& shapes, const rdf::Graph& graph) {
    auto compact = [&](const std::string& iri) -> std::string {
        for (const auto& [prefix, ns] : graph.prefixes()) {
            if (iri.size() > ns.size() && iri.compare(0, ns.size(), ns) == 0) {
                std::string local = iri.substr(ns.size());
                if (local.find('/') == std::string::npos && local.find('#') == std::string::npos) {
                    return prefix + ":" + local;
                }
            }
        }
        return "<" + iri + ">";
    };

    std::string out;
    int shape_number = 0;
    for (const auto& shape : shapes.shapes) {
        out += "ex:Shape" + std::to_string(shape_number++) + " {\n";
        out += "   rdf:type  [" + compact(shape.target_class) + "]  ;\n";
        for (size_t i = 0; i < shape.properties.size(); ++i) {
            const auto& decl = shape.properties[i];
            if (decl.predicate == vocab::rdf_type) continue;
            out += "   " + compact(decl.predicate) + "  ";
            switch (decl.object_kind.sort) {
                case ObjectKind::Sort::Datatype: out += compact(decl.object_kind.iri); break;
                case ObjectKind::Sort::ClassMembership:
                    out += "[" + compact(decl.object_kind.iri) + "]";
                    break;
                case ObjectKind::Sort::AnyIri: out += "IRI"; break;
            }
            if (!decl.required) out += " ?";
            out += (i + 1 < shape.properties.size()) ? "  ;\n" : "\n";
        }
        out += "}\n\n";
    }
    return out;
}

}  // namespace lodforge::audit
