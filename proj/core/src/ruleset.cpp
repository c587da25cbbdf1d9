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
#include "lodforge/ruleset.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lodforge/errors.hpp"
#include "lodforge/fs.hpp"
#include "lodforge/strings.hpp"
#include "lodforge/vocab.hpp"

namespace lodforge::fs {

std::string data_dir() {
    if (const char* env = std::getenv("LODFORGE_DATA_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
#ifdef LODFORGE_SOURCE_DATA_DIR
    if (std::filesystem::exists(LODFORGE_SOURCE_DATA_DIR)) return LODFORGE_SOURCE_DATA_DIR;
#endif
#ifdef LODFORGE_INSTALL_DATA_DIR
    return LODFORGE_INSTALL_DATA_DIR;
#else
    return ".";
#endif
}

std::string data_file(const std::string& relative) {
    return (std::filesystem::path(data_dir()) / relative).string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file", path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("read failure", path);
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open file for writing", path);
    out << content;
    out.flush();
    if (!out) throw IoError("write failure", path);
}

}  // namespace lodforge::fs

namespace lodforge::mapping {

std::string Rule::param(const std::string& key, const std::string& fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

std::vector<std::string> Rule::param_list(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) return {};
    return strings::split(it->second, '+');
}

const Rule* RuleSet::find(const std::string& selector) const {
    for (const auto& rule : rules) {
        if (rule.selector == selector) return &rule;  // first match wins
    }
    return nullptr;
}

RuleSet RuleSet::load(const std::string& path) { return parse(fs::read_file(path), path); }

RuleSet RuleSet::parse(const std::string& text, const std::string& origin) {
    RuleSet set;
    int line_no = 0;
    for (const auto& raw_line : strings::split(text, '\n')) {
        ++line_no;
        std::string line = raw_line;
        if (size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = strings::trim(line);
        if (line.empty()) continue;

        std::istringstream tokens(line);
        Rule rule;
        if (!(tokens >> rule.selector >> rule.handler)) {
            throw ConfigError(origin + ":" + std::to_string(line_no)
                              + ": rule needs a selector and a handler");
        }
        std::string token;
        while (tokens >> token) {
            size_t eq = token.find('=');
            if (eq == std::string::npos) {
                throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected key=value, got \""
                                  + token + "\"");
            }
            rule.params[token.substr(0, eq)] = token.substr(eq + 1);
        }
        set.rules.push_back(std::move(rule));
    }
    return set;
}

std::string expand_curie(const std::string& name) {
    if (strings::is_absolute_iri(name)) {
        // a prefixed name also looks scheme-like; prefer the prefix table
        size_t colon = name.find(':');
        std::string prefix = name.substr(0, colon);
        const auto& prefixes = vocab::default_prefixes();
        auto it = prefixes.find(prefix);
        if (it != prefixes.end()) return it->second + name.substr(colon + 1);
        return name;
    }
    size_t colon = name.find(':');
    if (colon == std::string::npos) {
        throw ConfigError("expected a prefixed name or absolute IRI: " + name);
    }
    std::string prefix = name.substr(0, colon);
    const auto& prefixes = vocab::default_prefixes();
    auto it = prefixes.find(prefix);
    if (it == prefixes.end()) throw ConfigError("unknown vocabulary prefix \"" + prefix + ":\"");
    return it->second + name.substr(colon + 1);
}

}  // namespace lodforge::mapping
