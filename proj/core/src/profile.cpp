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
#include "lodforge/profile.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "lodforge/errors.hpp"

namespace lodforge::ingest {

void ProfileBuilder::add(const marc::Record& record) {
    ++total_;
    for (const auto& cf : record.control_fields) {
        ++field_frequency_[cf.tag];
        ++values_[{cf.tag, std::nullopt}][cf.value];
    }
    for (const auto& df : record.data_fields) {
        ++field_frequency_[df.tag];
        for (const auto& sf : df.subfields) {
            ++values_[{df.tag, sf.code}][sf.value];
        }
    }
    std::string type = record.leader.size() >= 7 ? std::string(1, record.leader[6]) : "?";
    if (type == " ") type = "?";
    ++types_[type];
}

void ProfileBuilder::add(const dc::Record& record) {
    ++total_;
    for (const auto& [name, value] : record.elements) {
        ++field_frequency_[name];
        ++values_[{name, std::nullopt}][value];
    }
    auto type = record.first("type");
    ++types_[type ? *type : "(none)"];
}

SourceProfile ProfileBuilder::finish(int k) const {
    if (k < 1) throw ConfigError("profile histogram size k must be >= 1");
    SourceProfile out;
    out.total_records = total_;
    out.field_frequency = field_frequency_;
    out.record_type_counts = types_;
    for (const auto& [key, histogram] : values_) {
        std::vector<std::pair<std::string, long long>> entries(histogram.begin(), histogram.end());
        // count descending, value ascending: deterministic top-k
        std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        if (entries.size() > static_cast<size_t>(k)) entries.resize(static_cast<size_t>(k));
        out.distinct_values[key] = std::move(entries);
    }
    return out;
}

std::string to_json(const SourceProfile& profile) {
    nlohmann::ordered_json doc;
    doc["total_records"] = profile.total_records;
    nlohmann::ordered_json freq = nlohmann::ordered_json::object();
    for (const auto& [tag, count] : profile.field_frequency) freq[tag] = count;
    doc["field_frequency"] = std::move(freq);
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const auto& [key, histogram] : profile.distinct_values) {
        nlohmann::ordered_json entry;
        entry["field"] = key.first;
        if (key.second) {
            entry["subfield"] = std::string(1, *key.second);
        } else {
            entry["subfield"] = nullptr;
        }
        nlohmann::ordered_json vals = nlohmann::ordered_json::array();
        for (const auto& [value, count] : histogram) {
            vals.push_back({{"value", value}, {"count", count}});
        }
        entry["values"] = std::move(vals);
        values.push_back(std::move(entry));
    }
    doc["distinct_values"] = std::move(values);
    nlohmann::ordered_json types = nlohmann::ordered_json::object();
    for (const auto& [type, count] : profile.record_type_counts) types[type] = count;
    doc["record_type_counts"] = std::move(types);
    return doc.dump(2) + "\n";
}

}  // namespace lodforge::ingest
