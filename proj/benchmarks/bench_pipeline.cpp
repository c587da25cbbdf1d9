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
#include <benchmark/benchmark.h>

#include <sstream>

#include "lodforge/audit.hpp"
#include "lodforge/enrich.hpp"
#include "lodforge/fs.hpp"
#include "lodforge/mapping.hpp"
#include "lodforge/marc.hpp"
#include "lodforge/shapes.hpp"

namespace {

using namespace lodforge;

std::string synthetic_dump(int records) {
    std::ostringstream xml;
    xml << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<collection xmlns=\"http://www.loc.gov/MARC21/slim\">\n";
    for (int i = 0; i < records; ++i) {
        xml << "<record><leader>00000cam a2200000 a 4500</leader>"
            << "<controlfield tag=\"001\">rec" << i << "</controlfield>"
            << "<controlfield tag=\"008\">850101s1950    stk           000 0 eng  "
               "</controlfield>"
            << "<datafield tag=\"100\" ind1=\"1\" ind2=\" \">"
            << "<subfield code=\"a\">Author, Number " << i % 40 << ",</subfield>"
            << "<subfield code=\"d\">1900-1980</subfield>"
            << "<subfield code=\"e\">author</subfield></datafield>"
            << "<datafield tag=\"245\" ind1=\"1\" ind2=\"0\">"
            << "<subfield code=\"a\">Volume " << i << "</subfield></datafield>"
            << "<datafield tag=\"650\" ind1=\" \" ind2=\"0\">"
            << "<subfield code=\"a\">Subject " << i % 15 << "</subfield></datafield>"
            << "</record>\n";
    }
    xml << "</collection>\n";
    return xml.str();
}

std::vector<marc::Record> parse_records(const std::string& xml) {
    std::istringstream in(xml);
    return marc::read_all(in);
}

const enrich::Vocabularies& vocabularies() {
    static const enrich::Vocabularies tables = enrich::Vocabularies::load_defaults();
    return tables;
}

void BM_ParseMarcXml(benchmark::State& state) {
    std::string xml = synthetic_dump(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto records = parse_records(xml);
        benchmark::DoNotOptimize(records.size());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ParseMarcXml)->Arg(100)->Arg(1000);

void BM_TransformDump(benchmark::State& state) {
    auto records = parse_records(synthetic_dump(static_cast<int>(state.range(0))));
    mapping::MappingConfig config;
    config.pinned_date = "2022-11-09";
    mapping::Transformer transformer(config, &vocabularies());
    for (auto _ : state) {
        auto result = transformer.transform_dump(records);
        benchmark::DoNotOptimize(result.graph.size());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TransformDump)->Arg(100)->Arg(1000);

void BM_MineShapes(benchmark::State& state) {
    auto records = parse_records(synthetic_dump(static_cast<int>(state.range(0))));
    mapping::MappingConfig config;
    config.pinned_date = "2022-11-09";
    mapping::Transformer transformer(config, &vocabularies());
    auto graph = transformer.transform_dump(records).graph;
    for (auto _ : state) {
        auto shapes = audit::mine_shapes(graph, 1.0);
        benchmark::DoNotOptimize(shapes.shapes.size());
    }
}
BENCHMARK(BM_MineShapes)->Arg(100)->Arg(1000);

void BM_DuplicateDetection(benchmark::State& state) {
    auto records = parse_records(synthetic_dump(static_cast<int>(state.range(0))));
    mapping::MappingConfig config;
    config.pinned_date = "2022-11-09";
    mapping::Transformer transformer(config, &vocabularies());
    auto graph = transformer.transform_dump(records).graph;
    audit::AuditConfig audit_config;
    for (auto _ : state) {
        auto clusters = audit::detect_duplicate_agents(graph, audit_config);
        benchmark::DoNotOptimize(clusters.clusters.size());
    }
}
BENCHMARK(BM_DuplicateDetection)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
