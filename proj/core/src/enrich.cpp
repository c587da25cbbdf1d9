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
#include "lodforge/enrich.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "lodforge/errors.hpp"
#include "lodforge/fs.hpp"
#include "lodforge/strings.hpp"
#include "lodforge/vocab.hpp"

namespace lodforge::enrich {

namespace {

const std::vector<std::string>& agent_classes() {
    static const std::vector<std::string> classes = {
        vocab::bf + "Agent",    vocab::bf + "Person",     vocab::bf + "Organization",
        vocab::schema + "Person", vocab::foaf + "Person", vocab::schema + "Organization",
    };
    return classes;
}

const std::vector<std::string>& place_classes() {
    static const std::vector<std::string> classes = {vocab::bf + "Place", vocab::schema + "Place"};
    return classes;
}

const std::vector<std::string>& label_predicates() {
    static const std::vector<std::string> predicates = {
        vocab::rdfs_label, vocab::schema + "name", vocab::foaf + "name"};
    return predicates;
}

std::vector<ExternalEntity> parse_sparql_results(const std::string& body, const std::string& origin) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed SPARQL results document from " + origin + ": " + e.what(), 0);
    }
    std::vector<ExternalEntity> out;
    if (!doc.contains("results") || !doc["results"].contains("bindings")) {
        throw ParseError("SPARQL results document from " + origin + " has no results.bindings", 0);
    }
    for (const auto& binding : doc["results"]["bindings"]) {
        ExternalEntity entity;
        if (binding.contains("s") && binding["s"].contains("value")) {
            entity.iri = binding["s"]["value"].get<std::string>();
        }
        if (binding.contains("label") && binding["label"].contains("value")) {
            entity.label = binding["label"]["value"].get<std::string>();
        }
        if (!entity.iri.empty()) out.push_back(std::move(entity));
    }
    return out;
}

class HttpClient : public EndpointClient {
public:
    HttpClient(std::string endpoint, int timeout_ms) : endpoint_(std::move(endpoint)) {
        auto slash = endpoint_.find('/', endpoint_.find("//") + 2);
        host_ = slash == std::string::npos ? endpoint_ : endpoint_.substr(0, slash);
        path_ = slash == std::string::npos ? "/" : endpoint_.substr(slash);
        timeout_ms_ = timeout_ms;
    }

    std::vector<ExternalEntity> lookup(const std::string& needle) override {
        httplib::Client client(host_);
        client.set_connection_timeout(timeout_ms_ / 1000, (timeout_ms_ % 1000) * 1000);
        client.set_read_timeout(timeout_ms_ / 1000, (timeout_ms_ % 1000) * 1000);
        std::string query = "SELECT ?s ?label WHERE { ?s <" + vocab::rdfs_label
                            + "> ?label . FILTER regex(str(?label), \""
                            + strings::regex_escape(needle) + "\") }";
        httplib::Params params{{"query", query}};
        httplib::Headers headers{{"Accept", "application/sparql-results+json"}};
        auto res = client.Get(path_, params, headers);
        if (!res) throw IoError("endpoint request failed", endpoint_);
        if (res->status != 200) {
            throw IoError("endpoint returned HTTP " + std::to_string(res->status), endpoint_);
        }
        return parse_sparql_results(res->body, endpoint_);
    }

private:
    std::string endpoint_;
    std::string host_;
    std::string path_;
    int timeout_ms_;
};

class FixtureClient : public EndpointClient {
public:
    explicit FixtureClient(const std::string& path)
        : entities_(parse_sparql_results(fs::read_file(path), path)) {}

    std::vector<ExternalEntity> lookup(const std::string& needle) override {
        std::string folded_needle = strings::fold_label(needle);
        std::vector<ExternalEntity> out;
        for (const auto& entity : entities_) {
            if (entity.label.find(needle) != std::string::npos
                || strings::fold_label(entity.label).find(folded_needle) != std::string::npos) {
                out.push_back(entity);
            }
        }
        return out;
    }

private:
    std::vector<ExternalEntity> entities_;
};

struct LabelParts {
    std::string core;
    std::string dates;
};

LabelParts split_label(const std::string& label) {
    LabelParts parts;
    auto dates = strings::extract_life_dates(label);
    parts.dates = dates.value_or("");
    parts.core = strings::trim(strings::strip_life_dates(label));
    return parts;
}

}  // namespace

VocabularyTable VocabularyTable::load(const std::string& path, const std::string& name) {
    VocabularyTable table;
    table.name = name;
    const std::string ns = vocab::loc_vocabulary + name + "/";
    int line_no = 0;
    for (const auto& raw : strings::split(fs::read_file(path), '\n')) {
        ++line_no;
        std::string line = raw;
        if (size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = strings::trim(line);
        if (line.empty()) continue;
        size_t tab = line.find('\t');
        std::string code = strings::trim(tab == std::string::npos ? line : line.substr(0, tab));
        if (code.empty() || strings::contains_whitespace(code)) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": invalid vocabulary code");
        }
        if (name == "relators") {
            // relators file: <term>\t<code>; the term keys the entry
            if (tab == std::string::npos) {
                throw ConfigError(path + ":" + std::to_string(line_no)
                                  + ": relator lines need <term>\\t<code>");
            }
            std::string relator_code = strings::trim(line.substr(tab + 1));
            if (relator_code.empty() || strings::contains_whitespace(relator_code)) {
                throw ConfigError(path + ":" + std::to_string(line_no) + ": invalid relator code");
            }
            if (!table.entries.emplace(code, ns + relator_code).second) {
                throw ConfigError(path + ":" + std::to_string(line_no) + ": duplicate entry " + code);
            }
        } else {
            if (!table.entries.emplace(code, ns + code).second) {
                throw ConfigError(path + ":" + std::to_string(line_no) + ": duplicate entry " + code);
            }
        }
    }
    return table;
}

Vocabularies Vocabularies::load_defaults() {
    return load(fs::data_file("vocabulary/languages.tsv"),
                fs::data_file("vocabulary/geographic_areas.tsv"),
                fs::data_file("vocabulary/relators.tsv"));
}

Vocabularies Vocabularies::load(const std::string& languages_path, const std::string& geo_path,
                                const std::string& relators_path) {
    Vocabularies v;
    v.languages_ = VocabularyTable::load(languages_path, "languages");
    v.geographic_areas_ = VocabularyTable::load(geo_path, "geographicAreas");
    v.relators_ = VocabularyTable::load(relators_path, "relators");
    return v;
}

std::optional<std::string> Vocabularies::resolve_language(const std::string& code) const {
    std::string key = strings::to_lower_ascii(strings::trim(code));
    if (key.empty() || strings::contains_whitespace(key)) return std::nullopt;
    auto it = languages_.entries.find(key);
    if (it == languages_.entries.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> Vocabularies::resolve_geographic_area(const std::string& code) const {
    std::string key = strings::to_lower_ascii(strings::trim(code));
    if (key.empty() || strings::contains_whitespace(key)) return std::nullopt;
    while (!key.empty() && key.back() == '-') key.pop_back();  // MARC pads with hyphens
    auto it = geographic_areas_.entries.find(key);
    if (it == geographic_areas_.entries.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> Vocabularies::resolve_relator(const std::string& term) const {
    std::string key = strings::to_lower_ascii(strings::trim(term));
    while (!key.empty() && key.back() == '.') key.pop_back();
    if (key.empty()) return std::nullopt;
    auto it = relators_.entries.find(key);
    if (it == relators_.entries.end()) return std::nullopt;
    return it->second;
}

std::unique_ptr<EndpointClient> make_http_client(const std::string& endpoint_url, int timeout_ms) {
    return std::make_unique<HttpClient>(endpoint_url, timeout_ms);
}

std::unique_ptr<EndpointClient> make_fixture_client(const std::string& path) {
    return std::make_unique<FixtureClient>(path);
}

ReconcileOutcome reconcile(const rdf::Graph& graph, EndpointClient& client,
                           const ReconcileOptions& options) {
    const auto& classes = options.entity_kind == "place" ? place_classes() : agent_classes();

    // labeled resources of the kind, canonical order
    std::set<std::string> subjects;
    for (const auto& class_iri : classes) {
        for (const auto& instance : graph.instances_of(class_iri)) {
            if (instance.is_iri()) subjects.insert(instance.value);
        }
    }
    struct Task {
        std::string subject;
        std::string label;
    };
    std::vector<Task> tasks;
    for (const auto& subject : subjects) {
        for (const auto& predicate : label_predicates()) {
            auto labels = graph.objects_of(rdf::Term::iri(subject), predicate);
            if (!labels.empty() && labels.front().is_literal()) {
                tasks.push_back({subject, labels.front().value});
                break;
            }
        }
    }

    std::vector<std::vector<ReconciliationCandidate>> results(tasks.size());
    std::vector<std::string> errors(tasks.size());
    std::atomic<size_t> cursor{0};

    auto worker = [&]() {
        while (true) {
            size_t index = cursor.fetch_add(1);
            if (index >= tasks.size()) return;
            const Task& task = tasks[index];
            LabelParts source = split_label(task.label);
            try {
                std::vector<ExternalEntity> entities = client.lookup(source.core);
                for (const auto& entity : entities) {
                    LabelParts candidate = split_label(entity.label);
                    double score = 0;
                    std::vector<std::string> evidence;
                    bool exact = !source.core.empty() && source.core == candidate.core;
                    bool both_dates = !source.dates.empty() && !candidate.dates.empty();
                    if (exact && both_dates && source.dates == candidate.dates) {
                        score = 1.0;
                        evidence = {"exact label match", "life dates match"};
                    } else if (exact && !both_dates) {
                        score = 0.7;
                        evidence = {"exact label match"};
                    } else if (strings::fold_label(source.core) == strings::fold_label(candidate.core)
                               && !strings::fold_label(source.core).empty()) {
                        // covers exact cores with conflicting dates as well
                        score = 0.4;
                        evidence = {"normalized label match"};
                        if (exact && both_dates) evidence.push_back("life dates differ");
                    } else {
                        continue;
                    }
                    ReconciliationCandidate out;
                    out.subject_iri = task.subject;
                    out.external_iri = entity.iri;
                    out.matched_label = entity.label;
                    out.score = score;
                    out.evidence = std::move(evidence);
                    results[index].push_back(std::move(out));
                }
            } catch (const std::exception& e) {
                errors[index] = task.subject + ": " + e.what();
            }
        }
    };

    int budget = std::max(1, options.concurrency);
    std::vector<std::thread> threads;
    for (int i = 1; i < budget && static_cast<size_t>(i) < tasks.size(); ++i) {
        threads.emplace_back(worker);
    }
    worker();
    for (auto& t : threads) t.join();

    ReconcileOutcome outcome;
    for (size_t i = 0; i < tasks.size(); ++i) {
        auto& candidates = results[i];
        std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
            if (a.subject_iri != b.subject_iri) return a.subject_iri < b.subject_iri;
            if (a.score != b.score) return a.score > b.score;
            return a.external_iri < b.external_iri;
        });
        for (auto& c : candidates) {
            if (c.score + 1e-12 >= options.floor) outcome.candidates.push_back(std::move(c));
        }
        if (!errors[i].empty()) outcome.errors.push_back(errors[i]);
    }
    return outcome;
}

std::vector<AcceptedLink> load_acceptance_file(const std::string& path) {
    std::vector<AcceptedLink> out;
    int line_no = 0;
    for (const auto& raw : strings::split(fs::read_file(path), '\n')) {
        ++line_no;
        std::string line = strings::trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::string collapsed = strings::collapse_whitespace(line);
        size_t space = collapsed.find(' ');
        if (space == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(line_no)
                              + ": expected `<subject IRI> <external IRI>`");
        }
        out.push_back({collapsed.substr(0, space), collapsed.substr(space + 1)});
    }
    return out;
}

void apply_sameas(rdf::Graph& graph, const std::vector<AcceptedLink>& accepted) {
    // validate first: all subjects must be present
    std::set<std::string> subjects;
    for (const auto& t : graph.triples()) {
        if (t.subject.is_iri()) subjects.insert(t.subject.value);
    }
    std::vector<std::string> missing;
    for (const auto& link : accepted) {
        if (!subjects.count(link.subject_iri)) missing.push_back(link.subject_iri);
    }
    if (!missing.empty()) {
        std::string message = "acceptance references subjects absent from the graph:";
        for (const auto& iri : missing) message += " " + iri;
        throw ConfigError(message);
    }
    for (const auto& link : accepted) {
        graph.insert(rdf::Term::iri(link.subject_iri), rdf::Term::iri(vocab::owl_sameas),
                     rdf::Term::iri(link.external_iri));
    }
}

std::string candidates_to_json(const ReconcileOutcome& outcome) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& c : outcome.candidates) {
        list.push_back({{"subject", c.subject_iri},
                        {"external", c.external_iri},
                        {"label", c.matched_label},
                        {"score", c.score},
                        {"evidence", c.evidence}});
    }
    doc["candidates"] = std::move(list);
    doc["errors"] = outcome.errors;
    return doc.dump(2) + "\n";
}

}  // namespace lodforge::enrich
