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

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lodforge/term.hpp"

namespace lodforge::rdf {

struct GraphStats {
    long long class_count = 0;     // distinct objects of rdf:type triples
    long long property_count = 0;  // distinct predicates
    std::map<std::string, long long> class_histogram;      // class IRI -> instance count
    std::map<std::string, long long> predicate_histogram;  // predicate IRI -> triple count
};

/// In-memory triple set with namespace prefixes and lazily built POS/OSP
/// permutation indexes (the primary std::set is the SPO order). Safe for
/// concurrent readers once populated; single writer otherwise.
class Graph {
public:
    /// Inserts a well-formed triple; returns false when already present.
    /// Throws ConfigError for relative IRIs, literal subjects/predicates,
    /// or literals carrying both datatype and language tag.
    bool insert(Triple triple);
    bool insert(Term subject, Term predicate, Term object);

    bool contains(const Triple& triple) const;
    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    const std::set<Triple>& triples() const { return triples_; }

    std::map<std::string, std::string>& prefixes() { return prefixes_; }
    const std::map<std::string, std::string>& prefixes() const { return prefixes_; }

    std::optional<std::string>& base() { return base_; }
    const std::optional<std::string>& base() const { return base_; }

    /// Adds every triple and prefix of `other`.
    void merge(const Graph& other);

    /// Calls `fn` for each triple matching the optionally bound positions.
    /// Uses the SPO/POS/OSP index best covering the bound prefix.
    void scan(const std::optional<Term>& subject, const std::optional<Term>& predicate,
              const std::optional<Term>& object, const std::function<void(const Triple&)>& fn) const;

    /// Objects of (subject, predicate, ?) in canonical order.
    std::vector<Term> objects_of(const Term& subject, const std::string& predicate_iri) const;

    /// rdf:type objects of the subject.
    std::vector<std::string> types_of(const Term& subject) const;

    /// Subjects typed as `class_iri` in canonical order.
    std::vector<Term> instances_of(const std::string& class_iri) const;

    GraphStats stats() const;

private:
    void ensure_indexes() const;

    std::set<Triple> triples_;
    std::map<std::string, std::string> prefixes_;
    std::optional<std::string> base_;

    mutable std::vector<const Triple*> pos_;
    mutable std::vector<const Triple*> osp_;
    mutable bool indexes_valid_ = false;
};

/// Validates a triple the way Graph::insert does, without inserting.
void validate_triple(const Triple& triple);

}  // namespace lodforge::rdf
