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

#include <compare>
#include <string>

namespace lodforge::rdf {

/// RDF term: IRI, blank node, or literal. A literal carries a datatype IRI
/// or a language tag, never both; plain literals leave both empty.
struct Term {
    enum class Kind { Iri, BlankNode, Literal };

    Kind kind = Kind::Iri;
    std::string value;     // IRI text, blank-node label, or lexical form
    std::string datatype;  // literal datatype IRI, empty otherwise
    std::string lang;      // literal language tag, empty otherwise

    static Term iri(std::string value);
    static Term bnode(std::string label);
    static Term literal(std::string lexical, std::string datatype = {});
    static Term lang_literal(std::string lexical, std::string lang);

    bool is_iri() const { return kind == Kind::Iri; }
    bool is_bnode() const { return kind == Kind::BlankNode; }
    bool is_literal() const { return kind == Kind::Literal; }

    auto operator<=>(const Term&) const = default;
};

struct Triple {
    Term subject;    // IRI or blank node
    Term predicate;  // always an IRI
    Term object;

    auto operator<=>(const Triple&) const = default;
};

/// N-Triples form of a term/triple; the canonical text used for sorting,
/// diffing and evidence messages.
std::string to_ntriples(const Term& term);
std::string to_ntriples(const Triple& triple);

/// Term string form: lexical form for literals, the IRI/label otherwise
/// (the str() of the query language).
const std::string& string_form(const Term& term);

}  // namespace lodforge::rdf
