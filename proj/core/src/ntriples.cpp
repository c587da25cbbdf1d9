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
#include "lodforge/ntriples.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lodforge/sha256.hpp"

namespace lodforge::rdf {

namespace {

using ColorMap = std::map<std::string, std::string>;  // bnode label -> color

std::string term_key(const Term& term, const ColorMap& colors) {
    if (term.is_bnode()) {
        auto it = colors.find(term.value);
        return "_:" + (it != colors.end() ? it->second : std::string("?"));
    }
    return to_ntriples(term);
}

// One refinement round: each blank node's new color hashes its old color with
// the sorted multiset of its triple contexts under the current coloring.
ColorMap refine(const Graph& graph, const ColorMap& colors) {
    std::map<std::string, std::vector<std::string>> contexts;
    for (const auto& t : graph.triples()) {
        if (t.subject.is_bnode()) {
            contexts[t.subject.value].push_back("S " + term_key(t.predicate, colors) + " "
                                                + term_key(t.object, colors));
        }
        if (t.object.is_bnode()) {
            contexts[t.object.value].push_back("O " + term_key(t.subject, colors) + " "
                                               + term_key(t.predicate, colors));
        }
    }
    ColorMap next;
    for (const auto& [label, old_color] : colors) {
        auto& ctx = contexts[label];
        std::sort(ctx.begin(), ctx.end());
        std::string blob = old_color;
        for (const auto& c : ctx) blob += "|" + c;
        next[label] = sha256_hex(blob);
    }
    return next;
}

bool all_distinct(const ColorMap& colors) {
    std::set<std::string> seen;
    for (const auto& [label, color] : colors) {
        if (!seen.insert(color).second) return false;
    }
    return true;
}

std::string render(const Graph& graph, const std::map<std::string, std::string>& labels) {
    std::vector<std::string> lines;
    lines.reserve(graph.size());
    for (const auto& t : graph.triples()) {
        Triple r = t;
        if (r.subject.is_bnode()) r.subject.value = labels.at(r.subject.value);
        if (r.object.is_bnode()) r.object.value = labels.at(r.object.value);
        lines.push_back(to_ntriples(r));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

// Assigns final labels from a stable coloring; ambiguous color classes are
// resolved by individualizing each candidate in turn and keeping the choice
// that yields the lexicographically smallest document.
std::string canonicalize(const Graph& graph, ColorMap colors, int depth);

std::string finish_or_recurse(const Graph& graph, const ColorMap& colors, int depth) {
    // group labels by color
    std::map<std::string, std::vector<std::string>> classes;
    for (const auto& [label, color] : colors) classes[color].push_back(label);

    for (auto& [color, members] : classes) {
        if (members.size() <= 1) continue;
        if (depth > 8) {
            // symmetric beyond practical depth: fall back to sorted-label order
            break;
        }
        std::sort(members.begin(), members.end());
        std::string best;
        for (const auto& candidate : members) {
            ColorMap individualized = colors;
            individualized[candidate] = sha256_hex(color + "!pick");
            std::string doc = canonicalize(graph, individualized, depth + 1);
            if (best.empty() || doc < best) best = doc;
        }
        return best;
    }

    // all classes singleton (or depth capped): label by color order
    std::vector<std::pair<std::string, std::string>> ordered;  // (color, label)
    for (const auto& [label, color] : colors) ordered.emplace_back(color, label);
    std::sort(ordered.begin(), ordered.end());
    std::map<std::string, std::string> final_labels;
    int n = 0;
    for (const auto& [color, label] : ordered) final_labels[label] = "c" + std::to_string(n++);
    return render(graph, final_labels);
}

std::string canonicalize(const Graph& graph, ColorMap colors, int depth) {
    size_t rounds = colors.size() + 2;
    for (size_t i = 0; i < rounds; ++i) {
        ColorMap next = refine(graph, colors);
        if (next == colors) break;
        colors = std::move(next);
        if (all_distinct(colors)) break;
    }
    return finish_or_recurse(graph, colors, depth);
}

}  // namespace

std::string to_ntriples_sorted(const Graph& graph) {
    std::vector<std::string> lines;
    lines.reserve(graph.size());
    for (const auto& t : graph.triples()) lines.push_back(to_ntriples(t));
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

std::string to_ntriples_canonical(const Graph& graph) {
    ColorMap colors;
    for (const auto& t : graph.triples()) {
        if (t.subject.is_bnode()) colors.emplace(t.subject.value, "b");
        if (t.object.is_bnode()) colors.emplace(t.object.value, "b");
    }
    if (colors.empty()) return to_ntriples_sorted(graph);
    return canonicalize(graph, std::move(colors), 0);
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.size() != b.size()) return false;
    return to_ntriples_canonical(a) == to_ntriples_canonical(b);
}

}  // namespace lodforge::rdf
