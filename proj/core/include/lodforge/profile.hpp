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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lodforge/dublin_core.hpp"
#include "lodforge/marc.hpp"

namespace lodforge::ingest {

/// Source-dump profile: total records, per-field frequencies, top-k value
/// histograms, and record-type counts. Record types come from leader byte 6
/// for MARC and from the first dc:type value for DC ("(none)" when absent).
struct SourceProfile {
    long long total_records = 0;
    std::map<std::string, long long> field_frequency;
    /// (field, optional subfield code) -> top-k (value, count), ordered by
    /// count descending then value ascending.
    std::map<std::pair<std::string, std::optional<char>>,
             std::vector<std::pair<std::string, long long>>>
        distinct_values;
    std::map<std::string, long long> record_type_counts;
};

/// Accumulates records into a profile; a fold, usable incrementally with
/// streaming readers. `finish(k)` truncates histograms to the top k entries.
class ProfileBuilder {
public:
    void add(const marc::Record& record);
    void add(const dc::Record& record);
    SourceProfile finish(int k) const;

private:
    long long total_ = 0;
    std::map<std::string, long long> field_frequency_;
    std::map<std::pair<std::string, std::optional<char>>, std::map<std::string, long long>> values_;
    std::map<std::string, long long> types_;
};

template <typename Range>
SourceProfile profile(const Range& records, int k) {
    ProfileBuilder builder;
    for (const auto& record : records) builder.add(record);
    return builder.finish(k);
}

/// JSON document with the profile's field names; stable key order.
std::string to_json(const SourceProfile& profile);

}  // namespace lodforge::ingest
