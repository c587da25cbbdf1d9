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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lodforge/xml_reader.hpp"

namespace lodforge::marc {

struct ControlField {
    std::string tag;    // [0-9]{3}
    std::string value;
    int position = 0;   // 1-based position in the record's combined field sequence
};

struct Subfield {
    char code = ' ';
    std::string value;
};

struct DataField {
    std::string tag;
    char indicator1 = ' ';
    char indicator2 = ' ';
    std::vector<Subfield> subfields;  // never empty
    int ordinal = 0;                  // 1-based; see ParseOptions::ordinal_counts_control_fields

    std::optional<std::string> first_subfield(char code) const;
    /// Values of the given subfield codes in field order, joined by `sep`.
    std::string join_subfields(const std::string& codes, const std::string& sep = " ") const;
};

struct Record {
    std::string leader;  // exactly 24 chars, padded/truncated on ingest
    std::vector<ControlField> control_fields;
    std::vector<DataField> data_fields;
    std::vector<std::string> warnings;

    std::optional<std::string> control_value(const std::string& tag) const;
    const DataField* first_data_field(const std::string& tag) const;
};

struct ParseOptions {
    /// Records lacking this field are skipped with a record-level error
    /// (unset: no requirement; the mapper enforces its own id field).
    std::optional<std::string> require_field;
    /// When true (default) ordinals number control and data fields together
    /// in document order; when false only data fields are numbered.
    bool ordinal_counts_control_fields = true;
};

/// Streaming MARCXML reader: one Record per <record> element, field order and
/// 1-based ordinals preserved. Record-level problems skip the record and are
/// counted; malformed XML is a fatal ParseError with a byte offset.
class Reader {
public:
    Reader(std::istream& in, ParseOptions options = {});
    ~Reader();

    Reader(const Reader&) = delete;
    Reader& operator=(const Reader&) = delete;

    std::optional<Record> next();

    long long records_skipped() const { return records_skipped_; }
    const std::vector<std::string>& skip_messages() const { return skip_messages_; }

private:
    std::string collect_text_until_end_(const std::string& name, std::string& scratch);

    xml::Reader xml_;
    ParseOptions options_;
    bool done_ = false;
    long long records_skipped_ = 0;
    std::vector<std::string> skip_messages_;
};

/// Reads the whole dump eagerly. Convenience for tests and small inputs.
std::vector<Record> read_all(std::istream& in, ParseOptions options = {});

}  // namespace lodforge::marc
