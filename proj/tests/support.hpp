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

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "lodforge/dublin_core.hpp"
#include "lodforge/enrich.hpp"
#include "lodforge/fs.hpp"
#include "lodforge/mapping.hpp"
#include "lodforge/marc.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
    return std::string(LODFORGE_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    return lodforge::fs::read_file(fixture_path(name));
}

/// Unique scratch directory removed on destruction.
struct TempDir {
    std::filesystem::path path;

    explicit TempDir(const std::string& tag) {
        static std::atomic<int> counter{0};
        path = std::filesystem::temp_directory_path()
               / ("lodforge_" + tag + "_" + std::to_string(::getpid()) + "_"
                  + std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path);
    }

    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }

    std::string file(const std::string& name) const { return (path / name).string(); }
};

inline std::vector<lodforge::marc::Record> load_marc_fixture(const std::string& name,
                                                             lodforge::marc::ParseOptions options = {}) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    return lodforge::marc::read_all(in, options);
}

inline std::vector<lodforge::dc::Record> load_dc_fixture(const std::string& name,
                                                         lodforge::dc::ParseOptions options = {}) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    return lodforge::dc::read_all(in, options);
}

inline const lodforge::enrich::Vocabularies& vocabularies() {
    static const lodforge::enrich::Vocabularies tables =
        lodforge::enrich::Vocabularies::load_defaults();
    return tables;
}

inline lodforge::mapping::MappingConfig pinned_config() {
    lodforge::mapping::MappingConfig config;
    config.pinned_date = "2022-11-09";
    return config;
}

inline lodforge::rdf::Graph transform_marc_fixture(const std::string& name,
                                                   lodforge::mapping::TransformReport* report = nullptr) {
    lodforge::mapping::Transformer transformer(pinned_config(), &vocabularies());
    auto result = transformer.transform_dump(load_marc_fixture(name));
    if (report != nullptr) *report = result.report;
    return std::move(result.graph);
}

}  // namespace testsupport
