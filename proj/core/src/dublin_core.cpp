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
#include "lodforge/dublin_core.hpp"

#include <array>

#include "lodforge/errors.hpp"
#include "lodforge/strings.hpp"

namespace lodforge::dc {

namespace {

constexpr const char* kDcElements = "http://purl.org/dc/elements/1.1/";
constexpr const char* kDcTerms = "http://purl.org/dc/terms/";

constexpr std::array<const char*, 15> kCore = {
    "title",   "creator",  "subject",   "description", "publisher",
    "contributor", "date", "type",      "format",      "identifier",
    "source",  "language", "relation",  "coverage",    "rights"};

}  // namespace

bool is_core_element(const std::string& name) {
    for (const char* e : kCore) {
        if (name == e) return true;
    }
    return false;
}

std::vector<std::string> Record::values(const std::string& name) const {
    std::vector<std::string> out;
    for (const auto& [key, value] : elements) {
        if (key == name) out.push_back(value);
    }
    return out;
}

std::optional<std::string> Record::first(const std::string& name) const {
    for (const auto& [key, value] : elements) {
        if (key == name) return value;
    }
    return std::nullopt;
}

Reader::Reader(std::istream& in, ParseOptions options) : xml_(in), options_(std::move(options)) {}

std::optional<Record> Reader::next() {
    while (!done_) {
        xml::Event ev = xml_.next();
        if (ev.type == xml::Event::Type::EndOfDocument) {
            done_ = true;
            return std::nullopt;
        }
        if (ev.type != xml::Event::Type::StartElement || ev.name != options_.container) continue;

        Record record;
        record.source_ordinal = ++count_;
        int depth = 0;
        while (true) {
            ev = xml_.next();
            if (ev.type == xml::Event::Type::EndOfDocument) {
                throw ParseError("unexpected end of document inside record container",
                                 xml_.byte_offset(), xml_.line(), xml_.column());
            }
            if (ev.type == xml::Event::Type::EndElement) {
                if (depth == 0 && ev.name == options_.container) break;
                if (depth > 0) --depth;
                continue;
            }
            if (ev.type != xml::Event::Type::StartElement) continue;

            // a child element: collect its text content
            std::string element_ns = ev.ns;
            std::string element_name = ev.name;
            std::string text;
            int inner = 0;
            while (true) {
                xml::Event child = xml_.next();
                if (child.type == xml::Event::Type::EndOfDocument) {
                    throw ParseError("unexpected end of document inside element " + element_name,
                                     xml_.byte_offset(), xml_.line(), xml_.column());
                }
                if (child.type == xml::Event::Type::Text) {
                    text += child.text;
                } else if (child.type == xml::Event::Type::StartElement) {
                    ++inner;
                } else if (child.type == xml::Event::Type::EndElement) {
                    if (inner == 0) break;
                    --inner;
                }
            }

            std::string value = strings::trim(text);
            bool dc_ns = element_ns == kDcElements;
            bool dcterms_ns = strings::starts_with(element_ns, kDcTerms);
            if (dc_ns && !is_core_element(element_name)) {
                record.warnings.push_back("unknown dc element \"" + element_name + "\" preserved");
            } else if (!dc_ns && !dcterms_ns) {
                record.warnings.push_back("element \"" + element_name
                                          + "\" outside the DC namespaces preserved");
            }
            record.elements.emplace_back(element_name, value);
        }
        return record;
    }
    return std::nullopt;
}

std::vector<Record> read_all(std::istream& in, ParseOptions options) {
    Reader reader(in, std::move(options));
    std::vector<Record> records;
    while (auto record = reader.next()) records.push_back(std::move(*record));
    return records;
}

}  // namespace lodforge::dc
