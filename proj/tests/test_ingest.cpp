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
#include <doctest.h>

#include <set>
#include <sstream>
#include <zlib.h>

#include "lodforge/errors.hpp"
#include "lodforge/profile.hpp"
#include "support.hpp"

using namespace lodforge;

namespace {

std::string minimal_collection(const std::string& records) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<collection xmlns=\"http://www.loc.gov/MARC21/slim\">\n"
           + records + "</collection>\n";
}

const std::string kMinimalRecord =
    "<record><leader>00000cam a2200000 a 4500</leader>"
    "<controlfield tag=\"001\">15726</controlfield>"
    "<datafield tag=\"245\" ind1=\"1\" ind2=\"0\">"
    "<subfield code=\"a\">Treasure island</subfield></datafield></record>\n";

std::string gzip_bytes(const std::string& plain) {
    z_stream strm{};
    deflateInit2(&strm, Z_BEST_SPEED, Z_DEFLATED, 16 + MAX_WBITS, 8, Z_DEFAULT_STRATEGY);
    std::string out(plain.size() + 128, '\0');
    strm.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(plain.data()));
    strm.avail_in = static_cast<uInt>(plain.size());
    strm.next_out = reinterpret_cast<Bytef*>(out.data());
    strm.avail_out = static_cast<uInt>(out.size());
    deflate(&strm, Z_FINISH);
    out.resize(out.size() - strm.avail_out);
    deflateEnd(&strm);
    return out;
}

// independent record counter: a plain text scan for opening record elements
long long count_record_elements(const std::string& xml) {
    long long count = 0;
    size_t pos = 0;
    while ((pos = xml.find("<record", pos)) != std::string::npos) {
        ++count;
        pos += 7;
    }
    return count;
}

}  // namespace

TEST_CASE("minimal record parses with fields in order") {
    std::istringstream in(minimal_collection(kMinimalRecord));
    auto records = marc::read_all(in);
    REQUIRE(records.size() == 1);
    const auto& r = records[0];
    CHECK(r.leader.size() == 24);
    REQUIRE(r.control_fields.size() == 1);
    CHECK(r.control_fields[0].tag == "001");
    CHECK(r.control_fields[0].value == "15726");
    REQUIRE(r.data_fields.size() == 1);
    CHECK(r.data_fields[0].tag == "245");
    CHECK(r.data_fields[0].subfields[0].code == 'a');
    CHECK(r.data_fields[0].subfields[0].value == "Treasure island");
    CHECK(r.data_fields[0].ordinal == 2);  // control field counted
}

TEST_CASE("empty collection yields an empty sequence") {
    std::istringstream in(minimal_collection(""));
    CHECK(marc::read_all(in).empty());
}

TEST_CASE("ordinals are dense over control plus data fields") {
    for (const auto& record : testsupport::load_marc_fixture("nbs_sample.xml")) {
        std::set<int> ordinals;
        for (const auto& cf : record.control_fields) ordinals.insert(cf.position);
        for (const auto& df : record.data_fields) ordinals.insert(df.ordinal);
        int total = static_cast<int>(record.control_fields.size() + record.data_fields.size());
        REQUIRE(static_cast<int>(ordinals.size()) == total);
        CHECK(*ordinals.begin() == 1);
        CHECK(*ordinals.rbegin() == total);
    }
}

TEST_CASE("ordinals can exclude control fields") {
    std::istringstream in(minimal_collection(kMinimalRecord));
    marc::ParseOptions options;
    options.ordinal_counts_control_fields = false;
    auto records = marc::read_all(in, options);
    CHECK(records[0].data_fields[0].ordinal == 1);
}

TEST_CASE("truncated document yields the first record then fails with an offset") {
    std::string xml = minimal_collection(kMinimalRecord + kMinimalRecord);
    // cut inside the second record
    std::string truncated = xml.substr(0, xml.find("Treasure", xml.find("Treasure") + 1));
    std::istringstream in(truncated);
    marc::Reader reader(in);
    auto first = reader.next();
    REQUIRE(first.has_value());
    CHECK(first->control_fields[0].value == "15726");
    try {
        while (reader.next().has_value()) {
        }
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.byte_offset() > 0);
        CHECK(e.byte_offset() <= static_cast<long long>(truncated.size()));
    }
}

TEST_CASE("records missing a required field are skipped and counted") {
    std::string xml = minimal_collection(
        kMinimalRecord
        + "<record><leader>00000cam a2200000 a 4500</leader>"
          "<datafield tag=\"245\" ind1=\" \" ind2=\" \">"
          "<subfield code=\"a\">No identifier</subfield></datafield></record>\n");
    std::istringstream in(xml);
    marc::ParseOptions options;
    options.require_field = "001";
    marc::Reader reader(in, options);
    int yielded = 0;
    while (reader.next().has_value()) ++yielded;
    CHECK(yielded == 1);
    CHECK(reader.records_skipped() == 1);
}

TEST_CASE("non-UTF-8 encodings are rejected") {
    std::string xml = "<?xml version=\"1.0\" encoding=\"ISO-8859-1\"?><collection></collection>";
    std::istringstream in(xml);
    marc::Reader reader(in);
    CHECK_THROWS_AS(reader.next(), ParseError);
}

TEST_CASE("gzip input is detected by magic bytes") {
    std::string xml = minimal_collection(kMinimalRecord);
    std::string compressed = gzip_bytes(xml);
    std::istringstream in(compressed, std::ios::binary);
    auto records = marc::read_all(in);
    REQUIRE(records.size() == 1);
    CHECK(records[0].control_fields[0].value == "15726");
}

TEST_CASE("parsing the same bytes twice is pure") {
    auto first = testsupport::load_marc_fixture("nbs_sample.xml");
    auto second = testsupport::load_marc_fixture("nbs_sample.xml");
    REQUIRE(first.size() == second.size());
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].leader == second[i].leader);
        REQUIRE(first[i].data_fields.size() == second[i].data_fields.size());
        for (size_t j = 0; j < first[i].data_fields.size(); ++j) {
            CHECK(first[i].data_fields[j].tag == second[i].data_fields[j].tag);
            CHECK(first[i].data_fields[j].ordinal == second[i].data_fields[j].ordinal);
        }
    }
}

TEST_CASE("dublin core records preserve repeated elements in order") {
    auto records = testsupport::load_dc_fixture("mia_dc_sample.xml");
    REQUIRE(records.size() == 10);
    auto subjects = records[0].values("subject");
    REQUIRE(subjects.size() == 2);
    CHECK(subjects[0] == "Gaelic games");
    CHECK(subjects[1] == "Sport");
    CHECK(records[0].first("title").value() == "Dummy title");
    CHECK(records[1].first("title").value() == "Title only record");
    CHECK(records[0].source_ordinal == 1);
    CHECK(records[9].source_ordinal == 10);
}

TEST_CASE("foreign-namespace elements are preserved and flagged") {
    auto records = testsupport::load_dc_fixture("mia_dc_sample.xml");
    const auto& flagged = records[2];
    CHECK(flagged.first("number").value() == "R1");
    bool warned = false;
    for (const auto& w : flagged.warnings) {
        if (w.find("number") != std::string::npos) warned = true;
    }
    CHECK(warned);
}

TEST_CASE("profile counts records, fields and top-k values") {
    std::string xml = minimal_collection(kMinimalRecord + kMinimalRecord);
    std::istringstream in(xml);
    auto records = marc::read_all(in);
    auto profile = ingest::profile(records, 3);
    CHECK(profile.total_records == 2);
    CHECK(profile.field_frequency.at("245") == 2);
    CHECK(profile.record_type_counts.at("a") == 2);
}

TEST_CASE("profile total matches an independent element scan") {
    auto xml = testsupport::read_fixture("nbs_sample.xml");
    auto records = testsupport::load_marc_fixture("nbs_sample.xml");
    auto profile = ingest::profile(records, 5);
    CHECK(profile.total_records == count_record_elements(xml));
}

TEST_CASE("histogram is capped at k with deterministic ties") {
    auto records = testsupport::load_dc_fixture("mia_dc_sample.xml");
    auto profile = ingest::profile(records, 3);
    const auto& values = profile.distinct_values.at({"coverage", std::nullopt});
    REQUIRE(values.size() == 3);
    // all counts are 1: lexicographic tie-break
    CHECK(values[0].first == "1951 Glasgow");
    CHECK(values[0].second == 1);
    CHECK(values[1].first == "Aberdeen");
}

TEST_CASE("field frequency histogram subset of totals") {
    auto records = testsupport::load_marc_fixture("nbs_sample.xml");
    auto profile = ingest::profile(records, 4);
    for (const auto& [key, histogram] : profile.distinct_values) {
        long long histogram_total = 0;
        for (const auto& [value, count] : histogram) histogram_total += count;
        CHECK(histogram_total <= profile.field_frequency.at(key.first));
    }
}

TEST_CASE("profile of grep-derived subject counts") {
    // oracle: occurrences counted with a plain text scan over the raw XML
    auto xml = testsupport::read_fixture("mia_dc_sample.xml");
    long long gaelic = 0;
    size_t pos = 0;
    while ((pos = xml.find("<dc:subject>Gaelic games</dc:subject>", pos)) != std::string::npos) {
        ++gaelic;
        pos += 10;
    }
    auto records = testsupport::load_dc_fixture("mia_dc_sample.xml");
    auto profile = ingest::profile(records, 10);
    const auto& subjects = profile.distinct_values.at({"subject", std::nullopt});
    long long from_profile = 0;
    for (const auto& [value, count] : subjects) {
        if (value == "Gaelic games") from_profile = count;
    }
    CHECK(from_profile == gaelic);
}

TEST_CASE("profile exports as JSON") {
    auto records = testsupport::load_dc_fixture("mia_dc_sample.xml");
    auto profile = ingest::profile(records, 2);
    std::string json = ingest::to_json(profile);
    CHECK(json.find("\"total_records\": 10") != std::string::npos);
    CHECK(json.find("\"field_frequency\"") != std::string::npos);
    CHECK(json.find("\"record_type_counts\"") != std::string::npos);
}
