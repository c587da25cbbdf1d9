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
#include "lodforge/audit.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <random>
#include <regex>
#include <set>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "lodforge/errors.hpp"
#include "lodforge/fs.hpp"
#include "lodforge/ntriples.hpp"
#include "lodforge/ruleset.hpp"
#include "lodforge/strings.hpp"
#include "lodforge/turtle.hpp"
#include "lodforge/vocab.hpp"

namespace lodforge::audit {

namespace {

constexpr size_t kMaxEvidence = 20;

std::string mapping_expand(const std::string& name) { return mapping::expand_curie(name); }

std::string format_score(double score) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", score);
    return buf;
}

void push_evidence(Criterion& criterion, const std::string& message) {
    if (criterion.evidence.size() < kMaxEvidence) criterion.evidence.push_back(message);
}

bool is_reserved_test_host(const std::string& base_uri) {
    size_t scheme = base_uri.find("://");
    if (scheme == std::string::npos) return false;
    size_t start = scheme + 3;
    size_t end = base_uri.find('/', start);
    std::string host = strings::to_lower_ascii(
        base_uri.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (size_t colon = host.find(':'); colon != std::string::npos) host = host.substr(0, colon);
    if (host == "example.org" || host == "example.com" || host == "example.net"
        || host == "example.edu" || host == "localhost") {
        return true;
    }
    return strings::ends_with(host, ".example") || strings::ends_with(host, ".test")
           || strings::ends_with(host, ".invalid") || strings::ends_with(host, ".example.org")
           || strings::ends_with(host, ".example.com");
}

std::set<std::string> subject_iris(const rdf::Graph& graph) {
    std::set<std::string> out;
    for (const auto& t : graph.triples()) {
        if (t.subject.is_iri()) out.insert(t.subject.value);
    }
    return out;
}

struct HttpProbe : LinkProbe {
    explicit HttpProbe(int timeout_ms) : timeout_ms_(timeout_ms) {}

    int status_of(const std::string& url) override {
        size_t scheme = url.find("://");
        if (scheme == std::string::npos) return 0;
        size_t path_start = url.find('/', scheme + 3);
        std::string origin = path_start == std::string::npos ? url : url.substr(0, path_start);
        std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
        httplib::Client client(origin);
        client.set_connection_timeout(timeout_ms_ / 1000, (timeout_ms_ % 1000) * 1000);
        client.set_read_timeout(timeout_ms_ / 1000, (timeout_ms_ % 1000) * 1000);
        client.set_follow_location(true);
        auto head = client.Head(path);
        if (head && head->status != 405) return head->status;
        auto get = client.Get(path);
        return get ? get->status : 0;
    }

    int timeout_ms_;
};

struct ScriptedProbe : LinkProbe {
    explicit ScriptedProbe(const std::string& path) {
        int line_no = 0;
        for (const auto& raw : strings::split(fs::read_file(path), '\n')) {
            ++line_no;
            std::string line = strings::trim(raw);
            if (line.empty() || line[0] == '#') continue;
            size_t space = line.find_last_of(" \t");
            if (space == std::string::npos) {
                throw ConfigError(path + ":" + std::to_string(line_no)
                                  + ": expected `<url regex> <status>`");
            }
            std::string pattern = strings::trim(line.substr(0, space));
            std::string status = strings::trim(line.substr(space + 1));
            rules_.emplace_back(std::regex(pattern), std::stoi(status));
        }
    }

    int status_of(const std::string& url) override {
        for (const auto& [re, status] : rules_) {
            if (std::regex_search(url, re)) return status;
        }
        return 0;
    }

    std::vector<std::pair<std::regex, int>> rules_;
};

}  // namespace

const std::string& to_string(EvaluatorKind kind) {
    static const std::string names[] = {"AUTOMATIC", "NETWORK", "ASSISTED", "DECLARED"};
    return names[static_cast<int>(kind)];
}

const std::string& to_string(CriterionStatus status) {
    static const std::string names[] = {"scored", "skipped", "not_evaluated"};
    return names[static_cast<int>(status)];
}

const std::vector<CatalogueRow>& catalogue() {
    static const std::vector<CatalogueRow> rows = {
        {"accuracy.syntactic_validity_documents", "Accuracy", "Syntactic validity of RDF documents",
         EvaluatorKind::Automatic},
        {"accuracy.syntactic_validity_literals", "Accuracy", "Syntactic validity of literals",
         EvaluatorKind::Automatic},
        {"accuracy.semantic_validity_triples", "Accuracy", "Semantic validity of triples",
         EvaluatorKind::Assisted},
        {"accuracy.duplicate_check", "Accuracy", "Check of duplicate entities",
         EvaluatorKind::Automatic},
        {"trustworthiness.dataset_level", "Trustworthiness", "On dataset level",
         EvaluatorKind::Declared},
        {"trustworthiness.statement_level", "Trustworthiness", "On statement level",
         EvaluatorKind::Automatic},
        {"trustworthiness.unknown_values", "Trustworthiness", "Using unknown and empty values",
         EvaluatorKind::Automatic},
        {"consistency.schema_restrictions_insertion", "Consistency",
         "Consistency of schema restrictions during insertion of new statements",
         EvaluatorKind::Declared},
        {"consistency.class_constraints", "Consistency",
         "Consistency of statements with respect to class constraints", EvaluatorKind::Automatic},
        {"consistency.relation_constraints", "Consistency",
         "Consistency of statements with respect to relations constraints",
         EvaluatorKind::Automatic},
        {"relevancy.statement_ranking", "Relevancy", "Creating a ranking of statements",
         EvaluatorKind::Declared},
        {"completeness.schema", "Completeness", "Schema completeness", EvaluatorKind::Assisted},
        {"completeness.column", "Completeness", "Column completeness", EvaluatorKind::Assisted},
        {"completeness.population", "Completeness", "Population completeness",
         EvaluatorKind::Assisted},
        {"timeliness.frequency", "Timeliness", "Frequency", EvaluatorKind::Automatic},
        {"timeliness.validity_period", "Timeliness",
         "Specification of the validity period of statements", EvaluatorKind::Automatic},
        {"timeliness.modification_date", "Timeliness",
         "Specification of the modification date of statements", EvaluatorKind::Automatic},
        {"understanding.resource_description", "EaseOfUnderstanding", "Description of resources",
         EvaluatorKind::Automatic},
        {"understanding.multilingual_labels", "EaseOfUnderstanding", "Labels in multiple languages",
         EvaluatorKind::Automatic},
        {"understanding.serialization", "EaseOfUnderstanding", "Understandable RDF serialization",
         EvaluatorKind::Automatic},
        {"understanding.self_describing_uris", "EaseOfUnderstanding", "Self-describing URIs",
         EvaluatorKind::Automatic},
        {"interoperability.blank_nodes", "Interoperability",
         "Avoiding blank nodes and RDF reification", EvaluatorKind::Automatic},
        {"interoperability.serialization_formats", "Interoperability",
         "Provisioning of several serialization formats", EvaluatorKind::Automatic},
        {"interoperability.external_vocabulary", "Interoperability", "Using external vocabulary",
         EvaluatorKind::Automatic},
        {"interoperability.proprietary_vocabulary", "Interoperability",
         "Interoperability of proprietary vocabulary", EvaluatorKind::Automatic},
        {"accessibility.dereferencing", "Accessibility", "Dereferencing possibility of resources",
         EvaluatorKind::Network},
        {"accessibility.availability", "Accessibility", "Availability of the repository",
         EvaluatorKind::Declared},
        {"accessibility.sparql_endpoint", "Accessibility",
         "Availability of a public SPARQL endpoint", EvaluatorKind::Declared},
        {"accessibility.rdf_export", "Accessibility", "Provisioning of an RDF export",
         EvaluatorKind::Automatic},
        {"accessibility.content_negotiation", "Accessibility", "Support of content negotiation",
         EvaluatorKind::Declared},
        {"accessibility.html_rdf_links", "Accessibility",
         "Linking HTML sites to RDF serializations", EvaluatorKind::Declared},
        {"accessibility.metadata_provisioning", "Accessibility", "Provisioning of metadata",
         EvaluatorKind::Automatic},
        {"licensing.machine_readable", "Licensing",
         "Provisioning machine-readable licensing information", EvaluatorKind::Automatic},
        {"interlinking.sameas_rate", "Interlinking", "Interlinking via owl:sameAs",
         EvaluatorKind::Automatic},
        {"interlinking.external_uri_validity", "Interlinking", "Validity of external URIs",
         EvaluatorKind::Network},
    };
    return rows;
}

const Criterion* QualityReport::find(const std::string& id) const {
    for (const auto& c : criteria) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

std::string QualityReport::to_json() const {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& c : criteria) {
        nlohmann::ordered_json row;
        row["id"] = c.id;
        row["dimension"] = c.dimension;
        row["name"] = c.name;
        row["kind"] = to_string(c.kind);
        row["status"] = to_string(c.status);
        if (c.status == CriterionStatus::Scored) {
            row["score"] = c.score;
        } else {
            row["score"] = nullptr;
        }
        row["evidence"] = c.evidence;
        list.push_back(std::move(row));
    }
    doc["criteria"] = std::move(list);
    nlohmann::ordered_json means = nlohmann::ordered_json::object();
    for (const auto& [dimension, mean] : dimension_means) means[dimension] = mean;
    doc["dimension_means"] = std::move(means);
    doc["seed"] = seed;
    doc["link_sample_size"] = link_sample_size;
    nlohmann::ordered_json echo = nlohmann::ordered_json::object();
    for (const auto& [key, value] : config_echo) echo[key] = value;
    doc["config"] = std::move(echo);
    return doc.dump(2) + "\n";
}

std::string QualityReport::to_text() const {
    std::string out;
    auto pad = [](std::string s, size_t width) {
        if (s.size() < width) s.append(width - s.size(), ' ');
        return s;
    };
    out += pad("Dimension", 22) + pad("Criterion", 72) + "Score\n";
    out += std::string(104, '-') + "\n";
    std::string last_dimension;
    for (const auto& c : criteria) {
        std::string dimension = c.dimension == last_dimension ? "" : c.dimension;
        last_dimension = c.dimension;
        std::string score;
        switch (c.status) {
            case CriterionStatus::Scored: score = format_score(c.score); break;
            case CriterionStatus::Skipped: score = "skipped"; break;
            case CriterionStatus::NotEvaluated: score = "not evaluated"; break;
        }
        out += pad(dimension, 22) + pad(c.name, 72) + score + "\n";
    }
    return out;
}

GoldStandard GoldStandard::load(const std::string& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(fs::read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("gold standard " + path + " is not valid JSON: " + e.what());
    }
    GoldStandard gold;
    for (const auto& entry : doc.value("patterns", nlohmann::json::array())) {
        GoldPattern pattern;
        pattern.name = entry.value("name", "");
        std::string class_name = entry.value("class", "");
        if (class_name.empty()) throw ConfigError(path + ": pattern without class");
        pattern.class_iri = mapping_expand(class_name);
        for (const auto& p : entry.value("properties", nlohmann::json::array())) {
            pattern.properties.push_back(mapping_expand(p.get<std::string>()));
        }
        gold.patterns.push_back(std::move(pattern));
    }
    for (const auto& entry : doc.value("population", nlohmann::json::array())) {
        gold.population.emplace_back(entry.value("label", ""), entry.value("id", ""));
    }
    if (gold.patterns.empty()) throw ConfigError(path + ": gold standard needs patterns");
    return gold;
}

std::vector<LiteralRule> load_literal_rules(const std::string& path) {
    std::vector<LiteralRule> rules;
    int line_no = 0;
    for (const auto& raw : strings::split(fs::read_file(path), '\n')) {
        ++line_no;
        std::string line = raw;
        if (!line.empty() && line[0] == '#') continue;
        line = strings::trim(line);
        if (line.empty()) continue;
        size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(line_no)
                              + ": expected `<predicate>\\t<regex>`");
        }
        LiteralRule rule;
        rule.predicate = mapping_expand(strings::trim(line.substr(0, tab)));
        rule.regex = strings::trim(line.substr(tab + 1));
        rules.push_back(std::move(rule));
    }
    return rules;
}

Axioms Axioms::load(const std::string& path) {
    Axioms axioms;
    int line_no = 0;
    for (const auto& raw : strings::split(fs::read_file(path), '\n')) {
        ++line_no;
        std::string line = raw;
        if (size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = strings::trim(line);
        if (line.empty()) continue;
        auto tokens = strings::split(strings::collapse_whitespace(line), ' ');
        auto bad = [&](const char* why) {
            return ConfigError(path + ":" + std::to_string(line_no) + ": " + why);
        };
        if (tokens.size() != 3) throw bad("expected `<kind> <a> <b>`");
        if (tokens[0] == "disjoint") {
            axioms.disjoint_pairs.emplace_back(mapping_expand(tokens[1]), mapping_expand(tokens[2]));
        } else if (tokens[0] == "domain") {
            axioms.domains[mapping_expand(tokens[1])] = mapping_expand(tokens[2]);
        } else if (tokens[0] == "range") {
            std::string target = tokens[2];
            if (target != "resource" && target != "literal") target = mapping_expand(target);
            axioms.ranges[mapping_expand(tokens[1])] = target;
        } else {
            throw bad("unknown axiom kind");
        }
    }
    return axioms;
}

ReferenceExpectations ReferenceExpectations::load(const std::string& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(fs::read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("reference file " + path + " is not valid JSON: " + e.what());
    }
    ReferenceExpectations reference;
    for (const auto& entry : doc) {
        std::string iri = entry.value("iri", "");
        if (iri.empty()) throw ConfigError(path + ": reference entry without iri");
        for (const auto& [predicate, value] : entry.value("expect", nlohmann::json::object()).items()) {
            reference.by_iri[iri][mapping_expand(predicate)] = value.get<std::string>();
        }
    }
    return reference;
}

std::unique_ptr<LinkProbe> make_http_probe(int timeout_ms) {
    return std::make_unique<HttpProbe>(timeout_ms);
}

std::unique_ptr<LinkProbe> make_scripted_probe(const std::string& script_path) {
    return std::make_unique<ScriptedProbe>(script_path);
}

const std::vector<std::string>& default_label_predicates() {
    static const std::vector<std::string> predicates = {
        vocab::rdfs_label,         vocab::schema + "name", vocab::foaf + "name",
        vocab::skos + "prefLabel", vocab::dcterms + "title", vocab::bf + "mainTitle",
    };
    return predicates;
}

const std::vector<std::string>& default_agent_classes() {
    static const std::vector<std::string> classes = {
        vocab::bf + "Agent",      vocab::bf + "Person",   vocab::bf + "Organization",
        vocab::schema + "Person", vocab::foaf + "Person", vocab::schema + "Organization",
    };
    return classes;
}

std::string normalize_label(const std::string& label) {
    return strings::fold_label(strings::strip_life_dates(label));
}

LiteralValidity syntactic_validity_literals(const rdf::Graph& graph,
                                            const std::vector<LiteralRule>& rules) {
    LiteralValidity result;
    std::map<std::string, std::vector<std::regex>> compiled;
    for (const auto& rule : rules) compiled[rule.predicate].emplace_back(rule.regex);

    for (const auto& t : graph.triples()) {
        if (!t.object.is_literal()) continue;
        auto it = compiled.find(t.predicate.value);
        if (it == compiled.end()) continue;
        ++result.checked;
        bool ok = false;
        for (const auto& re : it->second) {
            if (std::regex_match(t.object.value, re)) {
                ok = true;
                break;
            }
        }
        if (ok) {
            ++result.valid;
        } else if (result.violations.size() < 1000) {
            result.violations.push_back(rdf::to_ntriples(t.subject) + " <" + t.predicate.value
                                        + "> \"" + t.object.value + "\"");
        }
    }
    result.score = result.checked == 0
                       ? 1.0
                       : static_cast<double>(result.valid) / static_cast<double>(result.checked);
    return result;
}

DuplicateClusters detect_duplicate_agents(const rdf::Graph& graph, const AuditConfig& config) {
    const auto& classes = config.agent_classes.empty() ? default_agent_classes()
                                                       : config.agent_classes;
    const auto& label_predicates =
        config.label_predicates.empty() ? default_label_predicates() : config.label_predicates;

    std::set<std::string> agents;
    for (const auto& class_iri : classes) {
        for (const auto& instance : graph.instances_of(class_iri)) {
            if (instance.is_iri()) agents.insert(instance.value);
        }
    }

    // normalized core + life dates key -> agent IRIs
    std::map<std::string, std::set<std::string>> buckets;
    long long labeled = 0;
    for (const auto& agent : agents) {
        std::optional<std::string> label;
        for (const auto& predicate : label_predicates) {
            auto objects = graph.objects_of(rdf::Term::iri(agent), predicate);
            for (const auto& o : objects) {
                if (o.is_literal()) {
                    label = o.value;
                    break;
                }
            }
            if (label) break;
        }
        if (!label) continue;
        ++labeled;
        std::string key = normalize_label(*label) + "|"
                          + strings::extract_life_dates(*label).value_or("");
        buckets[key].insert(agent);
    }

    DuplicateClusters result;
    result.labeled_agents = labeled;
    long long clustered = 0;
    for (const auto& [key, members] : buckets) {
        if (members.size() < 2) continue;
        clustered += static_cast<long long>(members.size());
        result.clusters.emplace_back(members.begin(), members.end());
    }
    result.score = labeled == 0
                       ? 1.0
                       : 1.0 - static_cast<double>(clustered) / static_cast<double>(labeled);
    return result;
}

ConsistencyViolations consistency_check(const rdf::Graph& graph, const Axioms& axioms) {
    ConsistencyViolations result;

    // class constraints: resources typed into both halves of a disjoint pair
    std::map<std::string, std::set<std::string>> types_by_subject;
    for (const auto& t : graph.triples()) {
        if (t.predicate.value == vocab::rdf_type && t.object.is_iri()) {
            types_by_subject[rdf::to_ntriples(t.subject)].insert(t.object.value);
        }
    }
    result.typed_resources = static_cast<long long>(types_by_subject.size());
    for (const auto& [subject, types] : types_by_subject) {
        for (const auto& [a, b] : axioms.disjoint_pairs) {
            if (types.count(a) && types.count(b)) {
                result.class_violations.push_back(subject + " typed both <" + a + "> and <" + b
                                                  + ">");
                break;
            }
        }
    }

    // relation constraints: domain/range of each declared predicate
    for (const auto& t : graph.triples()) {
        bool checked = false;
        auto domain = axioms.domains.find(t.predicate.value);
        if (domain != axioms.domains.end()) {
            checked = true;
            auto it = types_by_subject.find(rdf::to_ntriples(t.subject));
            if (it != types_by_subject.end() && !it->second.count(domain->second)) {
                result.relation_violations.push_back(rdf::to_ntriples(t) + " violates domain <"
                                                     + domain->second + ">");
            }
        }
        auto range = axioms.ranges.find(t.predicate.value);
        if (range != axioms.ranges.end()) {
            checked = true;
            const std::string& target = range->second;
            if (target == "resource") {
                if (t.object.is_literal()) {
                    result.relation_violations.push_back(rdf::to_ntriples(t)
                                                         + " has a literal object where a resource "
                                                           "is required");
                }
            } else if (target == "literal") {
                if (!t.object.is_literal()) {
                    result.relation_violations.push_back(rdf::to_ntriples(t)
                                                         + " has a resource object where a literal "
                                                           "is required");
                }
            } else {
                if (t.object.is_literal()) {
                    result.relation_violations.push_back(rdf::to_ntriples(t)
                                                         + " has a literal object where class <"
                                                         + target + "> is required");
                } else {
                    auto it = types_by_subject.find(rdf::to_ntriples(t.object));
                    if (it != types_by_subject.end() && !it->second.count(target)) {
                        result.relation_violations.push_back(rdf::to_ntriples(t)
                                                             + " violates range <" + target + ">");
                    }
                }
            }
        }
        if (checked) ++result.checked_triples;
    }
    return result;
}

CompletenessScores completeness(const rdf::Graph& graph, const GoldStandard& gold) {
    CompletenessScores scores;
    auto stats = graph.stats();

    // schema: gold classes and properties present anywhere
    long long units = 0, present = 0;
    for (const auto& pattern : gold.patterns) {
        ++units;
        if (stats.class_histogram.count(pattern.class_iri)) ++present;
        for (const auto& property : pattern.properties) {
            ++units;
            if (stats.predicate_histogram.count(property)) ++present;
        }
    }
    scores.schema = units == 0 ? 0.0 : static_cast<double>(present) / static_cast<double>(units);

    // column: mean fill rate over (class, property) pairs with instances
    double sum = 0;
    long long pairs = 0;
    for (const auto& pattern : gold.patterns) {
        auto instances = graph.instances_of(pattern.class_iri);
        if (instances.empty()) {
            scores.notes.push_back("class without instances excluded from column mean: "
                                   + pattern.class_iri);
            continue;
        }
        for (const auto& property : pattern.properties) {
            long long bearing = 0;
            for (const auto& instance : instances) {
                if (!graph.objects_of(instance, property).empty()) ++bearing;
            }
            sum += static_cast<double>(bearing) / static_cast<double>(instances.size());
            ++pairs;
        }
    }
    scores.column = pairs == 0 ? 0.0 : sum / static_cast<double>(pairs);

    // population: gold labels matched by some resource label (normalized)
    std::set<std::string> graph_labels;
    for (const auto& t : graph.triples()) {
        if (!t.object.is_literal()) continue;
        for (const auto& predicate : default_label_predicates()) {
            if (t.predicate.value == predicate) {
                graph_labels.insert(normalize_label(t.object.value));
                break;
            }
        }
    }
    long long matched = 0;
    for (const auto& [label, id] : gold.population) {
        if (graph_labels.count(normalize_label(label))) {
            ++matched;
        } else {
            scores.notes.push_back("population label not covered: " + label);
        }
    }
    scores.population = gold.population.empty()
                            ? 0.0
                            : static_cast<double>(matched)
                                  / static_cast<double>(gold.population.size());
    return scores;
}

LinkCheckResult check_links(const rdf::Graph& graph, const std::string& base_uri, int sample_size,
                            unsigned seed, LinkProbe& probe, int concurrency) {
    if (sample_size < 1) throw ConfigError("link sample size must be >= 1");
    std::set<std::string> candidate_set;
    for (const auto& t : graph.triples()) {
        if (t.predicate.value == vocab::rdf_type) continue;
        if (t.object.is_iri() && !strings::starts_with(t.object.value, base_uri)) {
            candidate_set.insert(t.object.value);
        }
    }
    std::vector<std::string> pool(candidate_set.begin(), candidate_set.end());

    LinkCheckResult result;
    if (pool.empty()) {
        result.rate = 1.0;
        return result;
    }

    // seeded partial Fisher-Yates; deterministic for (graph, seed, size)
    std::mt19937 rng(seed);
    size_t take = std::min<size_t>(static_cast<size_t>(sample_size), pool.size());
    for (size_t i = 0; i < take; ++i) {
        size_t j = i + static_cast<size_t>(rng() % (pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    result.sample.assign(pool.begin(), pool.begin() + static_cast<long>(take));

    std::vector<int> statuses(result.sample.size(), 0);
    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            size_t index = cursor.fetch_add(1);
            if (index >= result.sample.size()) return;
            statuses[index] = probe.status_of(result.sample[index]);
        }
    };
    int budget = std::max(1, concurrency);
    std::vector<std::thread> threads;
    for (int i = 1; i < budget && static_cast<size_t>(i) < result.sample.size(); ++i) {
        threads.emplace_back(worker);
    }
    worker();
    for (auto& t : threads) t.join();

    for (size_t i = 0; i < result.sample.size(); ++i) {
        ++result.probed;
        int status = statuses[i];
        if (status >= 200 && status < 400) {
            ++result.ok;
        } else {
            result.failures.emplace_back(result.sample[i], status);
        }
    }
    result.rate = result.probed == 0
                      ? 1.0
                      : static_cast<double>(result.ok) / static_cast<double>(result.probed);
    return result;
}

double interlinking_rate(const rdf::Graph& graph, const std::string& base_uri) {
    std::set<std::string> subjects;
    std::set<std::string> linked;
    for (const auto& t : graph.triples()) {
        std::string key = rdf::to_ntriples(t.subject);
        subjects.insert(key);
        // typing a resource is not an external link
        if (t.predicate.value == vocab::rdf_type) continue;
        if (t.object.is_iri() && !strings::starts_with(t.object.value, base_uri)) {
            linked.insert(key);
        }
    }
    if (subjects.empty()) return 0.0;
    return static_cast<double>(linked.size()) / static_cast<double>(subjects.size());
}

namespace {

void score(Criterion& c, double value) {
    c.status = CriterionStatus::Scored;
    c.score = value;
}

void score_declared(Criterion& c, const AuditConfig& config) {
    auto it = config.declared.find(c.id);
    bool asserted = it != config.declared.end() && it->second;
    score(c, asserted ? 1.0 : 0.0);
    push_evidence(c, asserted ? "declared satisfied in configuration"
                              : "not asserted in configuration");
}

}  // namespace

QualityReport evaluate(const rdf::Graph& graph, const AuditConfig& config) {
    if (graph.empty()) throw ConfigError("cannot audit an empty graph");

    QualityReport report;
    report.seed = config.seed;
    report.link_sample_size = config.link_sample_size;
    report.config_echo["base_uri"] = config.base_uri;
    report.config_echo["allow_network"] = config.allow_network ? "true" : "false";
    std::string formats_echo;
    for (const auto& f : config.formats) formats_echo += (formats_echo.empty() ? "" : ",") + f;
    report.config_echo["formats"] = formats_echo;

    const auto& label_predicates =
        config.label_predicates.empty() ? default_label_predicates() : config.label_predicates;
    auto subjects = subject_iris(graph);
    auto stats = graph.stats();

    for (const auto& row : catalogue()) {
        Criterion c;
        c.id = row.id;
        c.dimension = row.dimension;
        c.name = row.name;
        c.kind = row.kind;

        if (c.id == "accuracy.syntactic_validity_documents") {
            try {
                rdf::Graph reparsed = rdf::parse_turtle(rdf::serialize_turtle(graph));
                bool ok = reparsed.size() == graph.size();
                score(c, ok ? 1.0 : 0.0);
                push_evidence(c, ok ? "serialized document re-parses to the same statement count"
                                    : "re-parse produced a different statement count");
            } catch (const std::exception& e) {
                score(c, 0.0);
                push_evidence(c, std::string("serialization round-trip failed: ") + e.what());
            }
        } else if (c.id == "accuracy.syntactic_validity_literals") {
            auto result = syntactic_validity_literals(graph, config.literal_rules);
            score(c, result.score);
            push_evidence(c, std::to_string(result.valid) + "/" + std::to_string(result.checked)
                                 + " checked literals valid");
            for (const auto& v : result.violations) push_evidence(c, "violation: " + v);
        } else if (c.id == "accuracy.semantic_validity_triples") {
            if (config.reference == nullptr) {
                c.status = CriterionStatus::NotEvaluated;
                push_evidence(c, "no reference expectations supplied");
            } else {
                long long expectations = 0, satisfied = 0;
                for (const auto& [iri, expected] : config.reference->by_iri) {
                    for (const auto& [predicate, value] : expected) {
                        ++expectations;
                        bool hit = false;
                        for (const auto& object :
                             graph.objects_of(rdf::Term::iri(iri), predicate)) {
                            if (strings::trim(rdf::string_form(object)) == strings::trim(value)) {
                                hit = true;
                                break;
                            }
                        }
                        if (hit) {
                            ++satisfied;
                        } else {
                            push_evidence(c, "mismatch at <" + iri + "> <" + predicate
                                                 + ">: expected \"" + value + "\"");
                        }
                    }
                }
                score(c, expectations == 0 ? 1.0
                                           : static_cast<double>(satisfied)
                                                 / static_cast<double>(expectations));
                push_evidence(c, std::to_string(satisfied) + "/" + std::to_string(expectations)
                                     + " reference expectations satisfied");
            }
        } else if (c.id == "accuracy.duplicate_check") {
            auto result = detect_duplicate_agents(graph, config);
            score(c, result.score);
            push_evidence(c, std::to_string(result.clusters.size()) + " duplicate cluster(s) among "
                                 + std::to_string(result.labeled_agents) + " labeled agents");
            for (const auto& cluster : result.clusters) {
                std::string line = "cluster:";
                for (const auto& iri : cluster) line += " " + iri;
                push_evidence(c, line);
            }
        } else if (c.id == "trustworthiness.statement_level") {
            long long markers = stats.class_histogram.count(vocab::rdf_statement)
                                    ? stats.class_histogram.at(vocab::rdf_statement)
                                    : 0;
            score(c, markers > 0 ? 1.0 : 0.0);
            push_evidence(c, std::to_string(markers) + " statement-level provenance node(s)");
        } else if (c.id == "trustworthiness.unknown_values") {
            long long markers = 0;
            for (const auto& t : graph.triples()) {
                if (t.object.is_literal()) {
                    std::string v = strings::to_lower_ascii(strings::trim(t.object.value));
                    if (v == "unknown" || v == "n/a") ++markers;
                }
            }
            score(c, markers > 0 ? 1.0 : 0.0);
            push_evidence(c, std::to_string(markers) + " explicit unknown-value marker(s)");
        } else if (c.id == "consistency.class_constraints") {
            auto result = consistency_check(graph, config.axioms);
            double value = result.typed_resources == 0
                               ? 1.0
                               : 1.0
                                     - static_cast<double>(result.class_violations.size())
                                           / static_cast<double>(result.typed_resources);
            score(c, value);
            push_evidence(c, std::to_string(result.class_violations.size())
                                 + " disjointness violation(s) over "
                                 + std::to_string(result.typed_resources) + " typed resources");
            for (const auto& v : result.class_violations) push_evidence(c, v);
        } else if (c.id == "consistency.relation_constraints") {
            auto result = consistency_check(graph, config.axioms);
            double value = result.checked_triples == 0
                               ? 1.0
                               : 1.0
                                     - static_cast<double>(result.relation_violations.size())
                                           / static_cast<double>(result.checked_triples);
            score(c, value);
            push_evidence(c, std::to_string(result.relation_violations.size())
                                 + " domain/range violation(s) over "
                                 + std::to_string(result.checked_triples) + " checked triples");
            for (const auto& v : result.relation_violations) push_evidence(c, v);
        } else if (c.id == "completeness.schema" || c.id == "completeness.column"
                   || c.id == "completeness.population") {
            if (config.gold == nullptr) {
                c.status = CriterionStatus::NotEvaluated;
                push_evidence(c, "no gold standard supplied");
            } else {
                auto scores = completeness(graph, *config.gold);
                if (c.id == "completeness.schema") score(c, scores.schema);
                if (c.id == "completeness.column") score(c, scores.column);
                if (c.id == "completeness.population") score(c, scores.population);
                for (const auto& note : scores.notes) push_evidence(c, note);
            }
        } else if (c.id == "timeliness.frequency") {
            bool dataset_dated = config.dataset_modified.has_value();
            if (!dataset_dated) {
                for (const auto& t : graph.triples()) {
                    if (t.predicate.value == vocab::dcterms + "modified") {
                        dataset_dated = true;
                        break;
                    }
                }
            }
            long long statement_dates = stats.class_histogram.count(vocab::rdf_statement)
                                            ? stats.class_histogram.at(vocab::rdf_statement)
                                            : 0;
            double value = (dataset_dated ? 0.5 : 0.0) + (statement_dates > 0 ? 0.5 : 0.0);
            score(c, value);
            push_evidence(c, dataset_dated ? "dataset-level modification date available"
                                           : "no dataset-level modification date");
            push_evidence(c, "no per-statement dates");
        } else if (c.id == "timeliness.validity_period") {
            long long markers = 0;
            for (const std::string& predicate :
                 {vocab::schema + "validFrom", vocab::schema + "validThrough",
                  vocab::dcterms + "valid"}) {
                markers += stats.predicate_histogram.count(predicate)
                               ? stats.predicate_histogram.at(predicate)
                               : 0;
            }
            score(c, markers > 0 ? 1.0 : 0.0);
            push_evidence(c, std::to_string(markers) + " validity-period statement(s)");
        } else if (c.id == "timeliness.modification_date") {
            // per-statement modification dates require statement-level nodes
            long long markers = stats.class_histogram.count(vocab::rdf_statement)
                                    ? stats.class_histogram.at(vocab::rdf_statement)
                                    : 0;
            score(c, markers > 0 ? 1.0 : 0.0);
            push_evidence(c, "statement-level modification dates "
                                 + std::string(markers > 0 ? "present" : "absent"));
        } else if (c.id == "understanding.resource_description") {
            long long labeled = 0;
            for (const auto& subject : subjects) {
                for (const auto& predicate : label_predicates) {
                    if (!graph.objects_of(rdf::Term::iri(subject), predicate).empty()) {
                        ++labeled;
                        break;
                    }
                }
            }
            score(c, subjects.empty() ? 0.0
                                      : static_cast<double>(labeled)
                                            / static_cast<double>(subjects.size()));
            push_evidence(c, std::to_string(labeled) + "/" + std::to_string(subjects.size())
                                 + " subjects carry a label");
        } else if (c.id == "understanding.multilingual_labels") {
            std::set<std::string> tags;
            for (const auto& t : graph.triples()) {
                if (!t.object.is_literal() || t.object.lang.empty()) continue;
                for (const auto& predicate : label_predicates) {
                    if (t.predicate.value == predicate) {
                        tags.insert(strings::to_lower_ascii(t.object.lang));
                        break;
                    }
                }
            }
            score(c, tags.size() >= 2 ? 1.0 : 0.0);
            push_evidence(c, std::to_string(tags.size()) + " distinct language tag(s) on labels");
        } else if (c.id == "understanding.serialization") {
            bool understandable = false;
            for (const auto& f : config.formats) {
                if (f == "turtle" || f == "ntriples" || f == "rdfxml") understandable = true;
            }
            score(c, understandable ? 1.0 : 0.0);
            push_evidence(c, "formats: " + (formats_echo.empty() ? "(none)" : formats_echo));
        } else if (c.id == "understanding.self_describing_uris") {
            std::vector<std::string> patterns = config.uri_patterns;
            if (patterns.empty()) patterns.push_back("^" + strings::regex_escape(config.base_uri));
            std::vector<std::regex> compiled;
            for (const auto& p : patterns) compiled.emplace_back(p);
            long long matching = 0;
            for (const auto& subject : subjects) {
                for (const auto& re : compiled) {
                    if (std::regex_search(subject, re)) {
                        ++matching;
                        break;
                    }
                }
            }
            score(c, subjects.empty() ? 0.0
                                      : static_cast<double>(matching)
                                            / static_cast<double>(subjects.size()));
            push_evidence(c, std::to_string(matching) + "/" + std::to_string(subjects.size())
                                 + " subject IRIs match the configured patterns");
        } else if (c.id == "interoperability.blank_nodes") {
            long long bnodes = 0;
            for (const auto& t : graph.triples()) {
                if (t.subject.is_bnode() || t.object.is_bnode()) ++bnodes;
            }
            long long reified = stats.class_histogram.count(vocab::rdf_statement)
                                    ? stats.class_histogram.at(vocab::rdf_statement)
                                    : 0;
            score(c, (bnodes == 0 && reified == 0) ? 1.0 : 0.0);
            push_evidence(c, std::to_string(bnodes) + " blank-node statement(s), "
                                 + std::to_string(reified) + " reified statement(s)");
        } else if (c.id == "interoperability.serialization_formats") {
            size_t count = config.formats.size();
            score(c, count >= 2 ? 1.0 : (count == 1 ? 0.5 : 0.0));
            push_evidence(c, std::to_string(count) + " serialization format(s) provisioned");
        } else if (c.id == "interoperability.external_vocabulary") {
            bool external = false;
            for (const auto& [predicate, count] : stats.predicate_histogram) {
                if (!strings::starts_with(predicate, config.base_uri)) external = true;
            }
            score(c, external ? 1.0 : 0.0);
            push_evidence(c, external ? "external vocabularies in use"
                                      : "no external vocabulary detected");
        } else if (c.id == "interoperability.proprietary_vocabulary") {
            std::set<std::string> proprietary;
            for (const auto& [predicate, count] : stats.predicate_histogram) {
                if (strings::starts_with(predicate, config.base_uri)) proprietary.insert(predicate);
            }
            for (const auto& [class_iri, count] : stats.class_histogram) {
                if (strings::starts_with(class_iri, config.base_uri)) proprietary.insert(class_iri);
            }
            if (proprietary.empty()) {
                score(c, 1.0);
                push_evidence(c, "no proprietary vocabulary terms");
            } else {
                long long mapped = 0;
                for (const auto& term : proprietary) {
                    bool has_equivalence =
                        !graph.objects_of(rdf::Term::iri(term), vocab::owl + "equivalentClass")
                             .empty()
                        || !graph.objects_of(rdf::Term::iri(term), vocab::owl + "equivalentProperty")
                                .empty();
                    if (has_equivalence) ++mapped;
                }
                score(c, static_cast<double>(mapped) / static_cast<double>(proprietary.size()));
                push_evidence(c, std::to_string(mapped) + "/" + std::to_string(proprietary.size())
                                     + " proprietary terms mapped to external equivalents");
            }
        } else if (c.id == "accessibility.dereferencing") {
            if (is_reserved_test_host(config.base_uri)) {
                score(c, 0.0);
                push_evidence(c, "base URI uses a reserved test domain; resources cannot "
                                 "dereference");
            } else if (config.probe != nullptr && config.allow_network) {
                std::vector<std::string> pool(subjects.begin(), subjects.end());
                std::mt19937 rng(config.seed);
                size_t take = std::min<size_t>(
                    pool.size(), static_cast<size_t>(std::max(1, config.link_sample_size)));
                for (size_t i = 0; i < take; ++i) {
                    size_t j = i + static_cast<size_t>(rng() % (pool.size() - i));
                    std::swap(pool[i], pool[j]);
                }
                long long ok = 0;
                for (size_t i = 0; i < take; ++i) {
                    int status = config.probe->status_of(pool[i]);
                    if (status >= 200 && status < 400) ++ok;
                }
                score(c, take == 0 ? 0.0 : static_cast<double>(ok) / static_cast<double>(take));
                push_evidence(c, std::to_string(ok) + "/" + std::to_string(take)
                                     + " sampled subject IRIs dereference");
            } else {
                c.status = CriterionStatus::Skipped;
                push_evidence(c, "network budget not granted");
            }
        } else if (c.id == "accessibility.rdf_export") {
            score(c, config.formats.empty() ? 0.0 : 1.0);
            push_evidence(c, config.formats.empty() ? "no dump format provisioned"
                                                    : "dump provisioned: " + formats_echo);
        } else if (c.id == "accessibility.metadata_provisioning") {
            bool has_void = config.metadata_configured;
            if (!has_void) {
                for (const auto& [class_iri, count] : stats.class_histogram) {
                    if (class_iri == vocab::void_ns + "Dataset") has_void = true;
                }
            }
            score(c, has_void ? 1.0 : 0.0);
            push_evidence(c, has_void ? "dataset self-description available"
                                      : "no dataset self-description");
        } else if (c.id == "licensing.machine_readable") {
            bool licensed = false;
            std::string where;
            for (const std::string& predicate :
                 {vocab::dcterms + "license", vocab::schema + "license",
                  std::string("http://creativecommons.org/ns#license")}) {
                graph.scan(std::nullopt, rdf::Term::iri(predicate), std::nullopt,
                           [&](const rdf::Triple& t) {
                               if (t.object.is_iri()) {
                                   licensed = true;
                                   where = "license triple <" + predicate + ">";
                               }
                           });
            }
            if (!licensed && config.license_configured) {
                licensed = true;
                where = "license IRI configured for publication";
            }
            score(c, licensed ? 1.0 : 0.0);
            push_evidence(c, licensed ? where : "no machine-readable license found");
        } else if (c.id == "interlinking.sameas_rate") {
            double rate = interlinking_rate(graph, config.base_uri);
            score(c, rate);
            push_evidence(c, "rate of subjects with at least one external link");
        } else if (c.id == "interlinking.external_uri_validity") {
            if (config.probe == nullptr) {
                c.status = CriterionStatus::Skipped;
                push_evidence(c, "no link probe configured");
            } else {
                auto result = check_links(graph, config.base_uri, config.link_sample_size,
                                          config.seed, *config.probe, config.concurrency);
                score(c, result.rate);
                push_evidence(c, std::to_string(result.ok) + "/" + std::to_string(result.probed)
                                     + " sampled external URIs respond");
                for (const auto& [url, status] : result.failures) {
                    push_evidence(c, "failed (" + std::to_string(status) + "): " + url);
                }
            }
        } else if (c.kind == EvaluatorKind::Declared) {
            score_declared(c, config);
        } else {
            c.status = CriterionStatus::NotEvaluated;
            push_evidence(c, "no evaluator bound");
        }

        report.criteria.push_back(std::move(c));
    }

    // dimension rollups: arithmetic mean of the evaluated criteria
    std::map<std::string, std::pair<double, long long>> sums;
    for (const auto& c : report.criteria) {
        if (c.status == CriterionStatus::Scored) {
            sums[c.dimension].first += c.score;
            sums[c.dimension].second += 1;
        }
    }
    for (const auto& [dimension, sum] : sums) {
        if (sum.second > 0) report.dimension_means[dimension] = sum.first / sum.second;
    }
    return report;
}

}  // namespace lodforge::audit
