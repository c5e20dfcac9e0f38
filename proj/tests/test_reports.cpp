#include <doctest.h>

#include "mbqc/json_writer.hpp"
#include "mbqc/lattice_program.hpp"
#include "mbqc/reports.hpp"

using namespace mbqc;

TEST_CASE("doubles are printed with 17 significant digits") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(-0.25) == "-0.25");
}

TEST_CASE("writer escapes strings and nests containers") {
    JsonWriter w;
    w.begin_object();
    w.key("text").value("a\"b\\c\nd");
    w.key("list").begin_array().value(1).value(true).end_array();
    w.key("empty").begin_object().end_object();
    w.end_object();
    const std::string out = w.str();
    CHECK(out.find("\"a\\\"b\\\\c\\nd\"") != std::string::npos);
    CHECK(out.find("\"empty\": {}") != std::string::npos);
    CHECK(out.back() == '\n');
}

TEST_CASE("reports embed schema, version, seed, and tolerances") {
    const auto pattern = builtin_pattern("wire_identity", {3});
    const auto keys = verify::otp_from_mbqc(pattern.layout, pattern);
    const auto report = verify::check_one_time_pad(keys, 8, 42);
    const std::string json = otp_report_json(report);
    CHECK(json.find("\"schema\": \"verify/1\"") != std::string::npos);
    CHECK(json.find("\"tool_version\": \"") != std::string::npos);
    CHECK(json.find("\"seed\": 42") != std::string::npos);
    CHECK(json.find("\"tolerance\": ") != std::string::npos);

    // Byte-identical on repeat.
    CHECK(otp_report_json(report) == json);
}

TEST_CASE("enumerate report lists every trajectory with its byproduct") {
    const auto pattern = builtin_pattern("wire_identity", {3});
    const auto ensemble = enumerate_trajectories(build_cluster(pattern.layout), pattern);
    const std::string json = enumerate_report_json(ensemble, 0);
    CHECK(json.find("\"schema\": \"enumerate/1\"") != std::string::npos);
    CHECK(json.find("\"outcomes\": \"00\"") != std::string::npos);
    CHECK(json.find("\"outcomes\": \"11\"") != std::string::npos);
    CHECK(json.find("\"entropy_bits\": 2") != std::string::npos);
}
