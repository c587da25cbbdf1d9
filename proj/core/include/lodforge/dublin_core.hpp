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

#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lodforge/xml_reader.hpp"

namespace lodforge::dc {

/// The 15 Dublin Core elements.
bool is_core_element(const std::string& name);

struct Record {
    /// Order-preserving multimap of element name to value. Qualified
    /// (dcterms) elements keep their local name; elements outside the DC
    /// namespaces are preserved under their local name and flagged.
    std::vector<std::pair<std::string, std::string>> elements;
    int source_ordinal = 0;  // 1-based record index in the dump
    std::vector<std::string> warnings;

    std::vector<std::string> values(const std::string& name) const;
    std::optional<std::string> first(const std::string& name) const;
};

struct ParseOptions {
    /// Local name of the per-record container element ("dc" matches
    /// oai_dc:dc; "record" matches simple-DC dumps with <record> wrappers).
    std::string container = "dc";
};

/// Streaming reader for OAI-DC / simple DC dumps: one Record per container
/// element, repeated elements preserved in order.
class Reader {
public:
    Reader(std::istream& in, ParseOptions options = {});

    std::optional<Record> next();

private:
    xml::Reader xml_;
    ParseOptions options_;
    bool done_ = false;
    int count_ = 0;
};

std::vector<Record> read_all(std::istream& in, ParseOptions options = {});

}  // namespace lodforge::dc
