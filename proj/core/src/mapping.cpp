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
#include "lodforge/mapping.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <ctime>

#include <nlohmann/json.hpp>

#include "lodforge/errors.hpp"
#include "lodforge/fs.hpp"
#include "lodforge/strings.hpp"
#include "lodforge/vocab.hpp"

namespace lodforge::mapping {

namespace {

using rdf::Term;

constexpr size_t kMaxReportMessages = 64;

std::string today_utc() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday);
    return buf;
}

Term date_literal(const std::string& value) {
    if (strings::is_xsd_date(value)) return Term::literal(value, vocab::xsd_date);
    if (strings::is_xsd_gyear(value)) return Term::literal(value, vocab::xsd_gyear);
    return Term::literal(value);
}

std::string strip_isbd(std::string s) {
    s = strings::trim(s);
    while (!s.empty()) {
        char c = s.back();
        if (c == ':' || c == ';' || c == ',' || c == '/' || c == '=') {
            s.pop_back();
            while (!s.empty() && s.back() == ' ') s.pop_back();
        } else {
            break;
        }
    }
    return s;
}

bool has_digit(const std::string& s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

const std::string& kind_name(UriKind kind) {
    static const std::string names[] = {
        "Work",  "Instance",      "Hub",   "Agent", "Topic",             "Place",
        "Contribution", "AdminMetadata", "Title", "Item",  "ProvisionActivity",
    };
    switch (kind) {
        case UriKind::Work: return names[0];
        case UriKind::Instance: return names[1];
        case UriKind::Hub: return names[2];
        case UriKind::Agent: return names[3];
        case UriKind::Topic: return names[4];
        case UriKind::Place: return names[5];
        case UriKind::Contribution: return names[6];
        case UriKind::AdminMetadata: return names[7];
        case UriKind::Title: return names[8];
        case UriKind::Item: return names[9];
        case UriKind::ProvisionActivity: return names[10];
    }
    return names[0];
}

MappingConfig::MappingConfig() {
    dc_url_patterns = {
        {"film", "film/{id}"},
        {"author", "author/{name}"},
        {"location", "location/{name}"},
        {"organisation", "organisation/{name}"},
    };
}

void MappingConfig::validate() const {
    if (!strings::is_absolute_iri(base_uri)) {
        throw ConfigError("base URI must be absolute: " + base_uri);
    }
    if (!strings::ends_with(base_uri, "/")) {
        throw ConfigError("base URI must end with '/': " + base_uri);
    }
    if (id_field.size() != 3) throw ConfigError("id field must be a 3-digit MARC tag: " + id_field);
    for (const auto& [kind, tmpl] : dc_url_patterns) {
        strings::fill_template(tmpl, "x");  // throws unless exactly one placeholder
    }
}

void TransformReport::warn(const std::string& category, const std::string& message) {
    ++warnings[category];
    if (messages.size() < kMaxReportMessages) messages.push_back(category + ": " + message);
}

std::string TransformReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["records_processed"] = records_processed;
    doc["records_emitted"] = records_emitted;
    doc["records_skipped"] = records_skipped;
    nlohmann::ordered_json warning_counts = nlohmann::ordered_json::object();
    for (const auto& [category, count] : warnings) warning_counts[category] = count;
    doc["warnings"] = std::move(warning_counts);
    doc["messages"] = messages;
    return doc.dump(2) + "\n";
}

std::string mint_uri(const MappingConfig& config, UriKind kind, const std::string& record_id,
                     const std::string& field_tag, int ordinal, TransformReport* report) {
    if (record_id.empty()) throw ConfigError("cannot mint an entity IRI from an empty record id");
    bool hash_only = kind == UriKind::Work || kind == UriKind::Instance;
    if (hash_only && (!field_tag.empty() || ordinal != 0)) {
        throw ConfigError(kind_name(kind) + " IRIs take no field tag or ordinal");
    }
    if (!hash_only && (field_tag.empty() || ordinal <= 0)) {
        throw ConfigError(kind_name(kind) + " IRIs require a field tag and a positive ordinal");
    }
    std::string encoded = strings::percent_encode_path(record_id);
    if (encoded != record_id && report != nullptr) {
        report->warn("identifier_percent_encoded", record_id + " -> " + encoded);
    }
    std::string iri = config.base_uri + encoded + "#" + kind_name(kind);
    if (!hash_only) iri += field_tag + "-" + std::to_string(ordinal);
    return iri;
}

Transformer::Transformer(MappingConfig config, const enrich::Vocabularies* vocabularies)
    : config_(std::move(config)), vocabularies_(vocabularies) {
    config_.validate();
    marc_rules_ = RuleSet::load(config_.marc_ruleset_path.empty()
                                    ? fs::data_file("rules/marc_bibframe.rules")
                                    : config_.marc_ruleset_path);
    dc_rules_ = RuleSet::load(config_.dc_ruleset_path.empty() ? fs::data_file("rules/dc_schema.rules")
                                                              : config_.dc_ruleset_path);
}

std::optional<rdf::Graph> Transformer::transform_marc_record(const marc::Record& record,
                                                             TransformReport& report) const {
    // record identifier
    std::string id;
    std::string id_tag = config_.id_field;
    int id_position = 1;
    if (auto value = record.control_value(config_.id_field)) {
        id = strings::trim(*value);
        for (const auto& cf : record.control_fields) {
            if (cf.tag == config_.id_field) {
                id_position = cf.position;
                break;
            }
        }
    } else if (const auto* df = record.first_data_field(config_.id_field)) {
        if (!df->subfields.empty()) id = strings::trim(df->subfields.front().value);
        id_position = df->ordinal;
    }
    if (id.empty()) {
        report.warn("missing_id", "record without field " + config_.id_field + " skipped");
        return std::nullopt;
    }

    rdf::Graph g;
    Term work = Term::iri(mint_uri(config_, UriKind::Work, id, {}, 0, &report));
    Term instance = Term::iri(mint_uri(config_, UriKind::Instance, id));
    g.insert(work, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "Work"));
    g.insert(instance, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "Instance"));
    g.insert(work, Term::iri(vocab::bf + "hasInstance"), instance);
    g.insert(instance, Term::iri(vocab::bf + "instanceOf"), work);

    // provenance node for the record
    Term admin = Term::iri(
        mint_uri(config_, UriKind::AdminMetadata, id, id_tag, std::max(1, id_position), &report));
    g.insert(work, Term::iri(vocab::bflc + "adminMetadata"), admin);
    g.insert(admin, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "AdminMetadata"));
    g.insert(admin, Term::iri(vocab::bf + "source"), Term::literal(config_.source_note));
    std::string generated = config_.pinned_date.value_or(today_utc());
    g.insert(admin, Term::iri(vocab::bf + "generationDate"), date_literal(generated));

    // the 1xx agent, when present, is linked from hubs as the primary author
    std::optional<Term> primary_agent;
    for (const auto& df : record.data_fields) {
        if (df.tag.size() != 3 || df.tag[0] != '1') continue;
        const Rule* rule = marc_rules_.find(df.tag);
        if (rule != nullptr && rule->handler == "contribution") {
            primary_agent =
                Term::iri(mint_uri(config_, UriKind::Agent, id, df.tag, df.ordinal, &report));
            break;
        }
    }

    // control-field rules (fixed-position extraction)
    for (const auto& cf : record.control_fields) {
        const Rule* rule = marc_rules_.find(cf.tag);
        if (rule == nullptr) continue;
        if (rule->handler == "identifier") continue;
        if (rule->handler == "language") {
            std::string positions = rule->param("positions");
            size_t dash = positions.find('-');
            if (dash == std::string::npos) continue;
            size_t from = std::stoul(positions.substr(0, dash));
            size_t to = std::stoul(positions.substr(dash + 1));
            if (cf.value.size() <= to) {
                report.warn("short_control_field", cf.tag + " too short for language positions");
                continue;
            }
            std::string code = strings::trim(cf.value.substr(from, to - from + 1));
            if (code.empty() || code == "|||") continue;
            if (auto iri = vocabularies_->resolve_language(code)) {
                g.insert(work, Term::iri(vocab::bf + "language"), Term::iri(*iri));
            } else {
                report.warn("invalid_language_code", cf.tag + " code \"" + code + "\" rejected");
            }
        }
    }

    // data-field rules
    for (const auto& df : record.data_fields) {
        const Rule* rule = marc_rules_.find(df.tag);
        if (rule == nullptr) {
            report.warn("unmapped_field", "tag " + df.tag);
            continue;
        }
        apply_marc_rule(g, *rule, record, df, work, instance, id, primary_agent, report);
    }

    for (const auto& warning : record.warnings) report.warn("ingest", warning);
    return g;
}

void Transformer::apply_marc_rule(rdf::Graph& g, const Rule& rule, const marc::Record& record,
                                  const marc::DataField& field, const Term& work,
                                  const Term& instance, const std::string& id,
                                  const std::optional<Term>& primary_agent,
                                  TransformReport& report) const {
    (void)record;
    const std::string& handler = rule.handler;

    if (handler == "identifier") return;

    if (handler == "title") {
        std::string title = strip_isbd(field.join_subfields(rule.param("label", "abnp")));
        if (title.empty()) {
            report.warn("empty_title", "field " + field.tag);
            return;
        }
        Term node =
            Term::iri(mint_uri(config_, UriKind::Title, id, field.tag, field.ordinal, &report));
        g.insert(node, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "Title"));
        g.insert(node, Term::iri(vocab::bf + "mainTitle"), Term::literal(title));
        g.insert(work, Term::iri(vocab::bf + "title"), node);
        g.insert(instance, Term::iri(vocab::bf + "title"), node);
        g.insert(work, Term::iri(vocab::rdfs_label), Term::literal(title));
        g.insert(instance, Term::iri(vocab::rdfs_label), Term::literal(title));
        return;
    }

    if (handler == "hub") {
        std::string title = strip_isbd(field.join_subfields(rule.param("label", "adfklmnoprs")));
        if (title.empty()) {
            report.warn("empty_uniform_title", "field " + field.tag);
            return;
        }
        Term hub = Term::iri(mint_uri(config_, UriKind::Hub, id, field.tag, field.ordinal, &report));
        Term node =
            Term::iri(mint_uri(config_, UriKind::Title, id, field.tag, field.ordinal, &report));
        g.insert(hub, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "Hub"));
        g.insert(work, Term::iri(vocab::bf + "expressionOf"), hub);
        g.insert(hub, Term::iri(vocab::bf + "title"), node);
        g.insert(node, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "Title"));
        g.insert(node, Term::iri(vocab::bf + "mainTitle"), Term::literal(title));
        g.insert(hub, Term::iri(vocab::rdfs_label), Term::literal(title));
        if (primary_agent) g.insert(hub, Term::iri(vocab::bf + "agent"), *primary_agent);
        return;
    }

    if (handler == "contribution") {
        std::string label = field.join_subfields(rule.param("label", "abcdq"));
        if (label.empty()) {
            report.warn("empty_agent_label", "field " + field.tag);
            return;
        }
        Term contribution = Term::iri(
            mint_uri(config_, UriKind::Contribution, id, field.tag, field.ordinal, &report));
        Term agent =
            Term::iri(mint_uri(config_, UriKind::Agent, id, field.tag, field.ordinal, &report));
        g.insert(work, Term::iri(vocab::bf + "contribution"), contribution);
        g.insert(contribution, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "Contribution"));
        g.insert(contribution, Term::iri(vocab::bf + "agent"), agent);
        g.insert(agent, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "Agent"));
        std::string agent_class = rule.param("agent_class", "Person");
        g.insert(agent, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + agent_class));
        g.insert(agent, Term::iri(vocab::rdfs_label), Term::literal(label));

        std::string role_codes = rule.param("role", "e");
        for (const auto& sf : field.subfields) {
            if (role_codes.find(sf.code) == std::string::npos) continue;
            std::string term = strings::trim(sf.value);
            if (term.empty()) continue;
            if (auto iri = vocabularies_->resolve_relator(term)) {
                g.insert(contribution, Term::iri(vocab::bf + "role"), Term::iri(*iri));
            } else {
                g.insert(contribution, Term::iri(vocab::bf + "role"), Term::literal(term));
                report.warn("relator_text_fallback", "\"" + term + "\"");
            }
        }
        return;
    }

    if (handler == "topic") {
        std::string label = field.join_subfields(rule.param("label", "avxyz"), "--");
        if (label.empty()) return;
        Term topic =
            Term::iri(mint_uri(config_, UriKind::Topic, id, field.tag, field.ordinal, &report));
        g.insert(work, Term::iri(vocab::bf + "subject"), topic);
        g.insert(topic, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "Topic"));
        g.insert(topic, Term::iri(vocab::rdfs_label), Term::literal(label));
        return;
    }

    if (handler == "provision") {
        Term provision = Term::iri(
            mint_uri(config_, UriKind::ProvisionActivity, id, field.tag, field.ordinal, &report));
        g.insert(instance, Term::iri(vocab::bf + "provisionActivity"), provision);
        g.insert(provision, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "ProvisionActivity"));
        std::string date_code = rule.param("date", "c");
        std::string place_code = rule.param("place", "a");
        std::string agent_code = rule.param("agent", "b");
        if (auto date = field.first_subfield(date_code.empty() ? 'c' : date_code[0])) {
            std::string value = strings::trim(*date);
            if (!value.empty()) {
                g.insert(provision, Term::iri(vocab::bf + "date"), date_literal(value));
            }
        }
        if (auto place = field.first_subfield(place_code.empty() ? 'a' : place_code[0])) {
            std::string value = strip_isbd(*place);
            if (!value.empty()) {
                Term node = Term::iri(
                    mint_uri(config_, UriKind::Place, id, field.tag, field.ordinal, &report));
                g.insert(node, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "Place"));
                g.insert(node, Term::iri(vocab::rdfs_label), Term::literal(value));
                g.insert(provision, Term::iri(vocab::bf + "place"), node);
            }
        }
        if (auto agent = field.first_subfield(agent_code.empty() ? 'b' : agent_code[0])) {
            std::string value = strip_isbd(*agent);
            if (!value.empty()) {
                Term node = Term::iri(
                    mint_uri(config_, UriKind::Agent, id, field.tag, field.ordinal, &report));
                g.insert(node, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "Organization"));
                g.insert(node, Term::iri(vocab::rdfs_label), Term::literal(value));
                g.insert(provision, Term::iri(vocab::bf + "agent"), node);
            }
        }
        return;
    }

    if (handler == "language") {
        std::string codes = rule.param("subfields", "a");
        for (const auto& sf : field.subfields) {
            if (codes.find(sf.code) == std::string::npos) continue;
            std::string code = strings::trim(sf.value);
            if (code.empty()) continue;
            if (auto iri = vocabularies_->resolve_language(code)) {
                g.insert(work, Term::iri(vocab::bf + "language"), Term::iri(*iri));
            } else {
                report.warn("invalid_language_code", field.tag + " code \"" + code + "\" rejected");
            }
        }
        return;
    }

    if (handler == "geocode") {
        std::string codes = rule.param("subfields", "a");
        for (const auto& sf : field.subfields) {
            if (codes.find(sf.code) == std::string::npos) continue;
            std::string code = strings::trim(sf.value);
            if (code.empty()) continue;
            if (auto iri = vocabularies_->resolve_geographic_area(code)) {
                g.insert(work, Term::iri(vocab::bf + "geographicCoverage"), Term::iri(*iri));
            } else {
                report.warn("invalid_geographic_code",
                            field.tag + " code \"" + code + "\" rejected");
            }
        }
        return;
    }

    if (handler == "item") {
        Term item =
            Term::iri(mint_uri(config_, UriKind::Item, id, field.tag, field.ordinal, &report));
        g.insert(instance, Term::iri(vocab::bf + "hasItem"), item);
        g.insert(item, Term::iri(vocab::rdf_type), Term::iri(vocab::bf + "Item"));
        std::string label_codes = rule.param("label");
        if (!label_codes.empty()) {
            std::string label = field.join_subfields(label_codes);
            if (!label.empty()) {
                g.insert(item, Term::iri(vocab::rdfs_label), Term::literal(label));
            }
        }
        return;
    }

    report.warn("unknown_handler", rule.handler + " for tag " + field.tag);
}

std::optional<rdf::Graph> Transformer::transform_dc_record(const dc::Record& record,
                                                           TransformReport& report) const {
    std::string id;
    if (auto identifier = record.first("identifier")) id = strings::trim(*identifier);
    if (id.empty() && config_.synthesize_missing_ids) {
        id = "rec" + std::to_string(record.source_ordinal);
    }
    if (id.empty()) {
        report.warn("missing_id", "record " + std::to_string(record.source_ordinal)
                                      + " has no identifier");
        return std::nullopt;
    }

    rdf::Graph g;
    auto film_pattern = config_.dc_url_patterns.find("film");
    if (film_pattern == config_.dc_url_patterns.end()) {
        throw ConfigError("dc_url_patterns must define the \"film\" pattern");
    }
    Term film = Term::iri(
        config_.base_uri
        + strings::fill_template(film_pattern->second, strings::percent_encode_path(id)));
    g.insert(film, Term::iri(vocab::rdf_type), Term::iri(vocab::schema + "VideoObject"));

    for (const auto& [element, raw_value] : record.elements) {
        std::string value = strings::trim(raw_value);
        if (value.empty()) continue;
        const Rule* rule = dc_rules_.find(element);
        if (rule == nullptr) {
            if (element != "identifier") report.warn("unmapped_element", element);
            continue;
        }

        if (rule->handler == "literal") {
            std::string predicate = rule->param("predicate");
            if (predicate.empty()) continue;
            g.insert(film, Term::iri(expand_curie(predicate)), Term::literal(value));
            for (const auto& extra : rule->param_list("also")) {
                g.insert(film, Term::iri(expand_curie(extra)), Term::literal(value));
            }
            continue;
        }

        if (rule->handler == "resource") {
            std::string kind = rule->param("kind");
            auto pattern = config_.dc_url_patterns.find(kind);
            if (pattern == config_.dc_url_patterns.end()) {
                throw ConfigError("dc_url_patterns has no pattern for kind \"" + kind + "\"");
            }
            if (rule->param("when") == "no_digits" && has_digit(value)) {
                std::string fallback = rule->param("else");
                if (!fallback.empty()) {
                    g.insert(film, Term::iri(expand_curie(fallback)), Term::literal(value));
                } else {
                    report.warn("unrecognized_" + kind, value);
                }
                continue;
            }
            Term node = Term::iri(config_.base_uri
                                  + strings::fill_template(pattern->second, strings::slugify(value)));
            for (const auto& class_name : rule->param_list("classes")) {
                g.insert(node, Term::iri(vocab::rdf_type), Term::iri(expand_curie(class_name)));
            }
            for (const auto& name_predicate : rule->param_list("names")) {
                g.insert(node, Term::iri(expand_curie(name_predicate)), Term::literal(value));
            }
            std::string link = rule->param("link");
            if (!link.empty()) g.insert(film, Term::iri(expand_curie(link)), node);
            continue;
        }

        if (rule->handler == "license") {
            std::string predicate = rule->param("predicate", "schema:license");
            if (strings::is_absolute_iri(value)) {
                g.insert(film, Term::iri(expand_curie(predicate)), Term::iri(value));
            } else {
                g.insert(film, Term::iri(expand_curie(predicate)), Term::literal(value));
                report.warn("license_literal", value);
            }
            continue;
        }

        report.warn("unknown_handler", rule->handler + " for element " + element);
    }

    for (const auto& warning : record.warnings) report.warn("ingest", warning);
    return g;
}

Transformer::DumpResult Transformer::transform_dump(const std::vector<marc::Record>& records) const {
    DumpResult result;
    result.graph.prefixes() = vocab::default_prefixes();
    for (const auto& record : records) {
        ++result.report.records_processed;
        if (auto fragment = transform_marc_record(record, result.report)) {
            ++result.report.records_emitted;
            result.graph.merge(*fragment);
        } else {
            ++result.report.records_skipped;
        }
    }
    return result;
}

Transformer::DumpResult Transformer::transform_dump(const std::vector<dc::Record>& records) const {
    DumpResult result;
    result.graph.prefixes() = vocab::default_prefixes();
    for (const auto& record : records) {
        ++result.report.records_processed;
        if (auto fragment = transform_dc_record(record, result.report)) {
            ++result.report.records_emitted;
            result.graph.merge(*fragment);
        } else {
            ++result.report.records_skipped;
        }
    }
    return result;
}

std::vector<std::string> subject_uri_patterns(const MappingConfig& config) {
    std::vector<std::string> patterns;
    std::string base = strings::regex_escape(config.base_uri);
    patterns.push_back("^" + base + "[^#]+#(Work|Instance)$");
    patterns.push_back("^" + base
                       + "[^#]+#(Hub|Agent|Topic|Place|Contribution|AdminMetadata|Title|Item|"
                         "ProvisionActivity)[0-9]{3}-[0-9]+$");
    for (const auto& [kind, tmpl] : config.dc_url_patterns) {
        size_t placeholder = tmpl.find('{');
        patterns.push_back("^" + base + strings::regex_escape(tmpl.substr(0, placeholder)) + ".+$");
    }
    return patterns;
}

}  // namespace lodforge::mapping
