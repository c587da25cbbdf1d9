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
#include "lodforge/marc.hpp"

#include <cctype>

#include "lodforge/errors.hpp"
#include "lodforge/strings.hpp"

namespace lodforge::marc {

namespace {

bool valid_tag(const std::string& tag) {
    if (tag.size() != 3) return false;
    for (char c : tag) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

char indicator_char(const std::string& value) { return value.empty() ? ' ' : value[0]; }

}  // namespace

std::optional<std::string> DataField::first_subfield(char code) const {
    for (const auto& sf : subfields) {
        if (sf.code == code) return sf.value;
    }
    return std::nullopt;
}

std::string DataField::join_subfields(const std::string& codes, const std::string& sep) const {
    std::string out;
    for (const auto& sf : subfields) {
        if (codes.find(sf.code) == std::string::npos) continue;
        std::string v = strings::trim(sf.value);
        if (v.empty()) continue;
        if (!out.empty()) out += sep;
        out += v;
    }
    return out;
}

std::optional<std::string> Record::control_value(const std::string& tag) const {
    for (const auto& cf : control_fields) {
        if (cf.tag == tag) return cf.value;
    }
    return std::nullopt;
}

const DataField* Record::first_data_field(const std::string& tag) const {
    for (const auto& df : data_fields) {
        if (df.tag == tag) return &df;
    }
    return nullptr;
}

Reader::Reader(std::istream& in, ParseOptions options) : xml_(in), options_(options) {}

Reader::~Reader() = default;

std::optional<Record> Reader::next() {
    while (!done_) {
        // scan to the next <record>
        xml::Event ev = xml_.next();
        if (ev.type == xml::Event::Type::EndOfDocument) {
            done_ = true;
            return std::nullopt;
        }
        if (ev.type != xml::Event::Type::StartElement || ev.name != "record") continue;

        Record record;
        int position = 0;
        int data_ordinal = 0;
        bool has_required = !options_.require_field.has_value();

        // inside <record> until the matching end element
        std::string current_text;
        while (true) {
            ev = xml_.next();
            if (ev.type == xml::Event::Type::EndOfDocument) {
                throw ParseError("unexpected end of document inside record", xml_.byte_offset(),
                                 xml_.line(), xml_.column());
            }
            if (ev.type == xml::Event::Type::EndElement && ev.name == "record") break;

            if (ev.type == xml::Event::Type::StartElement && ev.name == "leader") {
                record.leader = collect_text_until_end_(ev.name, current_text);
                continue;
            }
            if (ev.type == xml::Event::Type::StartElement && ev.name == "controlfield") {
                ControlField cf;
                cf.tag = xml::attribute(ev, "tag");
                cf.value = collect_text_until_end_("controlfield", current_text);
                ++position;
                cf.position = position;
                if (!valid_tag(cf.tag)) {
                    record.warnings.push_back("control field with invalid tag \"" + cf.tag + "\" dropped");
                    --position;
                    continue;
                }
                if (options_.require_field && cf.tag == *options_.require_field) has_required = true;
                record.control_fields.push_back(std::move(cf));
                continue;
            }
            if (ev.type == xml::Event::Type::StartElement && ev.name == "datafield") {
                DataField df;
                df.tag = xml::attribute(ev, "tag");
                df.indicator1 = indicator_char(xml::attribute(ev, "ind1"));
                df.indicator2 = indicator_char(xml::attribute(ev, "ind2"));
                bool bad_subfield = false;
                while (true) {
                    xml::Event sub = xml_.next();
                    if (sub.type == xml::Event::Type::EndOfDocument) {
                        throw ParseError("unexpected end of document inside datafield",
                                         xml_.byte_offset(), xml_.line(), xml_.column());
                    }
                    if (sub.type == xml::Event::Type::EndElement && sub.name == "datafield") break;
                    if (sub.type == xml::Event::Type::StartElement && sub.name == "subfield") {
                        std::string code = xml::attribute(sub, "code");
                        std::string value = collect_text_until_end_("subfield", current_text);
                        if (code.empty()) {
                            bad_subfield = true;
                            continue;
                        }
                        df.subfields.push_back(Subfield{code[0], std::move(value)});
                    }
                }
                ++position;
                ++data_ordinal;
                df.ordinal = options_.ordinal_counts_control_fields ? position : data_ordinal;
                if (!valid_tag(df.tag)) {
                    record.warnings.push_back("data field with invalid tag \"" + df.tag + "\" dropped");
                    --position;
                    --data_ordinal;
                    continue;
                }
                if (df.subfields.empty()) {
                    record.warnings.push_back("data field " + df.tag + " without subfields dropped");
                    --position;
                    --data_ordinal;
                    continue;
                }
                if (bad_subfield) {
                    record.warnings.push_back("subfield without code in field " + df.tag + " dropped");
                }
                if (options_.require_field && df.tag == *options_.require_field) has_required = true;
                record.data_fields.push_back(std::move(df));
                continue;
            }
        }

        if (record.leader.size() != 24) {
            if (!record.leader.empty() || true) {
                record.warnings.push_back("leader normalized to 24 characters");
            }
            record.leader.resize(24, ' ');
        }
        if (!has_required) {
            ++records_skipped_;
            skip_messages_.push_back("record missing required field " + *options_.require_field
                                     + " skipped");
            continue;
        }
        return record;
    }
    return std::nullopt;
}

// Drains events until </name>, returning the concatenated text.
std::string Reader::collect_text_until_end_(const std::string& name, std::string& scratch) {
    scratch.clear();
    while (true) {
        xml::Event ev = xml_.next();
        if (ev.type == xml::Event::Type::EndOfDocument) {
            throw ParseError("unexpected end of document inside element " + name, xml_.byte_offset(),
                             xml_.line(), xml_.column());
        }
        if (ev.type == xml::Event::Type::Text) {
            scratch += ev.text;
            continue;
        }
        if (ev.type == xml::Event::Type::EndElement && ev.name == name) return scratch;
        // foreign markup inside a value element is ignored
    }
}

std::vector<Record> read_all(std::istream& in, ParseOptions options) {
    Reader reader(in, options);
    std::vector<Record> records;
    while (auto record = reader.next()) records.push_back(std::move(*record));
    return records;
}

}  // namespace lodforge::marc
