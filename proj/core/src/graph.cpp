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
#include "lodforge/graph.hpp"

#include <algorithm>

#include "lodforge/errors.hpp"
#include "lodforge/strings.hpp"
#include "lodforge/vocab.hpp"

namespace lodforge::rdf {

namespace {

std::string escape_ntriples(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

bool pos_less(const Triple* a, const Triple* b) {
    if (a->predicate != b->predicate) return a->predicate < b->predicate;
    if (a->object != b->object) return a->object < b->object;
    return a->subject < b->subject;
}

bool osp_less(const Triple* a, const Triple* b) {
    if (a->object != b->object) return a->object < b->object;
    if (a->subject != b->subject) return a->subject < b->subject;
    return a->predicate < b->predicate;
}

}  // namespace

Term Term::iri(std::string value) {
    Term t;
    t.kind = Kind::Iri;
    t.value = std::move(value);
    return t;
}

Term Term::bnode(std::string label) {
    Term t;
    t.kind = Kind::BlankNode;
    t.value = std::move(label);
    return t;
}

Term Term::literal(std::string lexical, std::string datatype) {
    Term t;
    t.kind = Kind::Literal;
    t.value = std::move(lexical);
    // simple literals and xsd:string literals are one and the same term
    if (datatype != vocab::xsd_string) t.datatype = std::move(datatype);
    return t;
}

Term Term::lang_literal(std::string lexical, std::string lang) {
    Term t;
    t.kind = Kind::Literal;
    t.value = std::move(lexical);
    t.lang = std::move(lang);
    return t;
}

std::string to_ntriples(const Term& term) {
    switch (term.kind) {
        case Term::Kind::Iri:
            return "<" + term.value + ">";
        case Term::Kind::BlankNode:
            return "_:" + term.value;
        case Term::Kind::Literal: {
            std::string out = "\"" + escape_ntriples(term.value) + "\"";
            if (!term.lang.empty()) {
                out += "@" + term.lang;
            } else if (!term.datatype.empty() && term.datatype != vocab::xsd_string) {
                out += "^^<" + term.datatype + ">";
            }
            return out;
        }
    }
    return {};
}

std::string to_ntriples(const Triple& triple) {
    return to_ntriples(triple.subject) + " " + to_ntriples(triple.predicate) + " "
           + to_ntriples(triple.object) + " .";
}

const std::string& string_form(const Term& term) { return term.value; }

void validate_triple(const Triple& triple) {
    if (triple.subject.is_literal()) throw ConfigError("triple subject must be an IRI or blank node");
    if (!triple.predicate.is_iri()) throw ConfigError("triple predicate must be an IRI");
    for (const Term* t : {&triple.subject, &triple.predicate, &triple.object}) {
        if (t->is_iri() && !strings::is_absolute_iri(t->value)) {
            throw ConfigError("relative IRI rejected: " + t->value);
        }
        if (t->is_literal() && !t->datatype.empty() && !t->lang.empty()) {
            throw ConfigError("literal cannot carry both datatype and language tag: " + t->value);
        }
    }
}

bool Graph::insert(Triple triple) {
    validate_triple(triple);
    auto [it, inserted] = triples_.insert(std::move(triple));
    if (inserted) indexes_valid_ = false;
    return inserted;
}

bool Graph::insert(Term subject, Term predicate, Term object) {
    return insert(Triple{std::move(subject), std::move(predicate), std::move(object)});
}

bool Graph::contains(const Triple& triple) const { return triples_.count(triple) > 0; }

void Graph::merge(const Graph& other) {
    for (const auto& t : other.triples()) insert(t);
    for (const auto& [prefix, iri] : other.prefixes()) prefixes_.emplace(prefix, iri);
}

void Graph::ensure_indexes() const {
    if (indexes_valid_) return;
    pos_.clear();
    osp_.clear();
    pos_.reserve(triples_.size());
    for (const auto& t : triples_) pos_.push_back(&t);
    osp_ = pos_;
    std::sort(pos_.begin(), pos_.end(), pos_less);
    std::sort(osp_.begin(), osp_.end(), osp_less);
    indexes_valid_ = true;
}

void Graph::scan(const std::optional<Term>& subject, const std::optional<Term>& predicate,
                 const std::optional<Term>& object,
                 const std::function<void(const Triple&)>& fn) const {
    auto matches = [&](const Triple& t) {
        return (!subject || t.subject == *subject) && (!predicate || t.predicate == *predicate)
               && (!object || t.object == *object);
    };

    if (subject) {
        // SPO range on the primary set
        auto it = triples_.lower_bound(Triple{*subject, Term{Term::Kind::Iri, "", "", ""},
                                              Term{Term::Kind::Iri, "", "", ""}});
        for (; it != triples_.end() && it->subject == *subject; ++it) {
            if (matches(*it)) fn(*it);
        }
        return;
    }
    if (predicate) {
        ensure_indexes();
        Triple probe{Term{Term::Kind::Iri, "", "", ""}, *predicate, Term{Term::Kind::Iri, "", "", ""}};
        auto lower = std::lower_bound(pos_.begin(), pos_.end(), &probe, pos_less);
        for (auto it = lower; it != pos_.end() && (*it)->predicate == *predicate; ++it) {
            if (matches(**it)) fn(**it);
        }
        return;
    }
    if (object) {
        ensure_indexes();
        Triple probe{Term{Term::Kind::Iri, "", "", ""}, Term{Term::Kind::Iri, "", "", ""}, *object};
        auto lower = std::lower_bound(osp_.begin(), osp_.end(), &probe, osp_less);
        for (auto it = lower; it != osp_.end() && (*it)->object == *object; ++it) {
            if (matches(**it)) fn(**it);
        }
        return;
    }
    for (const auto& t : triples_) fn(t);
}

std::vector<Term> Graph::objects_of(const Term& subject, const std::string& predicate_iri) const {
    std::vector<Term> out;
    scan(subject, Term::iri(predicate_iri), std::nullopt,
         [&](const Triple& t) { out.push_back(t.object); });
    return out;
}

std::vector<std::string> Graph::types_of(const Term& subject) const {
    std::vector<std::string> out;
    scan(subject, Term::iri(vocab::rdf_type), std::nullopt, [&](const Triple& t) {
        if (t.object.is_iri()) out.push_back(t.object.value);
    });
    return out;
}

std::vector<Term> Graph::instances_of(const std::string& class_iri) const {
    std::vector<Term> out;
    scan(std::nullopt, Term::iri(vocab::rdf_type), Term::iri(class_iri),
         [&](const Triple& t) { out.push_back(t.subject); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace lodforge::rdf

namespace lodforge::vocab {

const std::map<std::string, std::string>& default_prefixes() {
    static const std::map<std::string, std::string> prefixes = {
        {"rdf", rdf},       {"rdfs", rdfs},     {"xsd", xsd},   {"owl", owl},
        {"skos", skos},     {"dc", dc},         {"dcterms", dcterms},
        {"foaf", foaf},     {"schema", schema}, {"bf", bf},     {"bflc", bflc},
        {"edm", edm},       {"void", void_ns},
    };
    return prefixes;
}

}  // namespace lodforge::vocab

namespace lodforge::rdf {

GraphStats Graph::stats() const {
    GraphStats stats;
    std::set<std::string> predicates;
    for (const auto& t : triples_) {
        predicates.insert(t.predicate.value);
        ++stats.predicate_histogram[t.predicate.value];
        if (t.predicate.value == vocab::rdf_type && t.object.is_iri()) {
            ++stats.class_histogram[t.object.value];
        }
    }
    stats.class_count = static_cast<long long>(stats.class_histogram.size());
    stats.property_count = static_cast<long long>(predicates.size());
    return stats;
}

}  // namespace lodforge::rdf
