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

#include <map>
#include <string>
#include <vector>

namespace lodforge::mapping {

/// One declarative mapping rule. `selector` is a MARC tag or DC element
/// name, `handler` the structural recipe applied, `params` its settings.
///
/// File format, one rule per line:
///     <selector>  <handler>  [key=value]...
/// '#' starts a comment. Values use '+' to separate list entries; prefixed
/// names (schema:name) expand against the well-known namespaces.
struct Rule {
    std::string selector;
    std::string handler;
    std::map<std::string, std::string> params;

    std::string param(const std::string& key, const std::string& fallback = {}) const;
    std::vector<std::string> param_list(const std::string& key) const;  // '+'-separated
};

struct RuleSet {
    std::vector<Rule> rules;

    const Rule* find(const std::string& selector) const;
    static RuleSet load(const std::string& path);
    static RuleSet parse(const std::string& text, const std::string& origin);
};

/// Expands prefixed names against the well-known namespace table; absolute
/// IRIs pass through. Throws ConfigError for unknown prefixes.
std::string expand_curie(const std::string& name);

}  // namespace lodforge::mapping
