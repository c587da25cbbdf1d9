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
#include "lodforge/rdfxml.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include "lodforge/errors.hpp"
#include "lodforge/strings.hpp"
#include "lodforge/vocab.hpp"
#include "lodforge/xml_reader.hpp"

namespace lodforge::rdf {

namespace {

constexpr const char* kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";

bool ncname_char(char c, bool first) {
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return true;
    if (first) return false;
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.';
}

/// Splits an IRI into (namespace, NCName local). The local part is the
/// longest valid NCName suffix; empty when none exists.
std::pair<std::string, std::string> split_qname(const std::string& iri) {
    size_t split = iri.size();
    for (size_t i = iri.size(); i > 0; --i) {
        char c = iri[i - 1];
        if (!ncname_char(c, false)) break;
        if (ncname_char(c, true)) split = i - 1;
    }
    if (split == iri.size()) return {iri, ""};
    return {iri.substr(0, split), iri.substr(split)};
}

std::string escape_xml(const std::string& s, bool attribute) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"':
                if (attribute) {
                    out += "&quot;";
                } else {
                    out.push_back(c);
                }
                break;
            default: out.push_back(c);
        }
    }
    return out;
}

class XmlWriter {
public:
    explicit XmlWriter(const Graph& graph) : graph_(graph) {
        // collect predicate namespaces; every predicate must be splittable
        next_auto_ = 0;
        for (const auto& t : graph_.triples()) {
            qname_for(t.predicate.value);
        }
    }

    std::string run() {
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out << "<rdf:RDF xmlns:rdf=\"" << kRdfNs << "\"";
        for (const auto& [ns, prefix] : ns_to_prefix_) {
            if (ns == kRdfNs) continue;
            out << "\n         xmlns:" << prefix << "=\"" << escape_xml(ns, true) << "\"";
        }
        out << ">\n";

        const Term* current = nullptr;
        bool open = false;
        for (const auto& t : graph_.triples()) {
            if (current == nullptr || !(t.subject == *current)) {
                if (open) out << "  </rdf:Description>\n";
                current = &t.subject;
                open = true;
                out << "  <rdf:Description ";
                if (t.subject.is_bnode()) {
                    out << "rdf:nodeID=\"b" << escape_xml(t.subject.value, true) << "\"";
                } else {
                    out << "rdf:about=\"" << escape_xml(t.subject.value, true) << "\"";
                }
                out << ">\n";
            }
            emit_property(out, t);
        }
        if (open) out << "  </rdf:Description>\n";
        out << "</rdf:RDF>\n";
        return out.str();
    }

private:
    void emit_property(std::ostringstream& out, const Triple& t) {
        std::string qname = qname_for(t.predicate.value);
        out << "    <" << qname;
        const Term& o = t.object;
        if (o.is_iri()) {
            out << " rdf:resource=\"" << escape_xml(o.value, true) << "\"/>\n";
            return;
        }
        if (o.is_bnode()) {
            out << " rdf:nodeID=\"b" << escape_xml(o.value, true) << "\"/>\n";
            return;
        }
        if (!o.lang.empty()) out << " xml:lang=\"" << escape_xml(o.lang, true) << "\"";
        if (!o.datatype.empty()) out << " rdf:datatype=\"" << escape_xml(o.datatype, true) << "\"";
        out << ">" << escape_xml(o.value, false) << "</" << qname << ">\n";
    }

    std::string qname_for(const std::string& iri) {
        auto [ns, local] = split_qname(iri);
        if (local.empty()) {
            throw ConfigError("predicate IRI cannot be written as RDF/XML (no NCName suffix): "
                              + iri);
        }
        auto it = ns_to_prefix_.find(ns);
        if (it == ns_to_prefix_.end()) {
            std::string prefix = preferred_prefix(ns);
            it = ns_to_prefix_.emplace(ns, prefix).first;
        }
        return it->second + ":" + local;
    }

    std::string preferred_prefix(const std::string& ns) {
        if (ns == kRdfNs) return "rdf";
        for (const auto& [prefix, iri] : graph_.prefixes()) {
            if (iri == ns && !prefix.empty() && used_prefixes_.insert(prefix).second) return prefix;
        }
        std::string prefix;
        do {
            prefix = "ns" + std::to_string(next_auto_++);
        } while (!used_prefixes_.insert(prefix).second);
        return prefix;
    }

    const Graph& graph_;
    std::map<std::string, std::string> ns_to_prefix_;
    std::set<std::string> used_prefixes_{"rdf"};
    int next_auto_ = 0;
};

class XmlParser {
public:
    explicit XmlParser(const std::string& text) : in_(text), reader_(in_) {}

    Graph run() {
        bool root_seen = false;
        while (true) {
            xml::Event ev = reader_.next();
            if (ev.type == xml::Event::Type::EndOfDocument) break;
            if (ev.type != xml::Event::Type::StartElement) continue;
            if (!root_seen && ev.ns == kRdfNs && ev.name == "RDF") {
                root_seen = true;
                continue;
            }
            if (!root_seen) {
                throw ParseError("RDF/XML document must start with rdf:RDF", reader_.byte_offset(),
                                 reader_.line(), reader_.column());
            }
            parse_node(ev);
        }
        if (!root_seen) {
            throw ParseError("no rdf:RDF root element found", reader_.byte_offset(), reader_.line(),
                             reader_.column());
        }
        return std::move(graph_);
    }

private:
    Term subject_of(const xml::Event& ev) {
        std::string about = xml::attribute(ev, "about");
        std::string node_id = xml::attribute(ev, "nodeID");
        if (!about.empty()) return Term::iri(about);
        if (!node_id.empty()) return Term::bnode(node_id);
        return Term::bnode("auto" + std::to_string(auto_bnode_++));
    }

    void parse_node(const xml::Event& start) {
        Term subject = subject_of(start);
        if (!(start.ns == kRdfNs && start.name == "Description")) {
            // typed node element: the element name is the class
            graph_.insert(subject, Term::iri(vocab::rdf_type), Term::iri(start.ns + start.name));
        }
        while (true) {
            xml::Event ev = reader_.next();
            if (ev.type == xml::Event::Type::EndOfDocument) {
                throw ParseError("unexpected end of document inside node element",
                                 reader_.byte_offset(), reader_.line(), reader_.column());
            }
            if (ev.type == xml::Event::Type::EndElement
                && ((ev.ns == start.ns && ev.name == start.name))) {
                return;
            }
            if (ev.type != xml::Event::Type::StartElement) continue;
            parse_property(subject, ev);
        }
    }

    void parse_property(const Term& subject, const xml::Event& start) {
        Term predicate = Term::iri(start.ns + start.name);
        std::string resource = xml::attribute(start, "resource");
        std::string node_id = xml::attribute(start, "nodeID");
        std::string datatype = xml::attribute(start, "datatype");
        std::string lang = xml::attribute(start, "lang");

        std::string text;
        bool has_child = false;
        while (true) {
            xml::Event ev = reader_.next();
            if (ev.type == xml::Event::Type::EndOfDocument) {
                throw ParseError("unexpected end of document inside property element",
                                 reader_.byte_offset(), reader_.line(), reader_.column());
            }
            if (ev.type == xml::Event::Type::Text) {
                text += ev.text;
                continue;
            }
            if (ev.type == xml::Event::Type::EndElement && ev.ns == start.ns
                && ev.name == start.name) {
                break;
            }
            if (ev.type == xml::Event::Type::StartElement) {
                // nested node element as property value
                has_child = true;
                Term nested = subject_of(ev);
                graph_.insert(subject, predicate, nested);
                parse_node(ev);
            }
        }

        if (has_child) return;
        if (!resource.empty()) {
            graph_.insert(subject, predicate, Term::iri(resource));
            return;
        }
        if (!node_id.empty()) {
            graph_.insert(subject, predicate, Term::bnode(node_id));
            return;
        }
        Term object = !lang.empty() ? Term::lang_literal(text, lang) : Term::literal(text, datatype);
        graph_.insert(subject, predicate, object);
    }

    std::istringstream in_;
    xml::Reader reader_;
    Graph graph_;
    long long auto_bnode_ = 0;
};

}  // namespace

std::string serialize_rdfxml(const Graph& graph) { return XmlWriter(graph).run(); }

Graph parse_rdfxml(const std::string& text) { return XmlParser(text).run(); }

}  // namespace lodforge::rdf
