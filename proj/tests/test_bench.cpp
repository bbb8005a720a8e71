#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "sympath/bench_runner.hpp"
#include "test_helpers.hpp"

using namespace sympath;

namespace {

std::string strip_runtime_column(const std::string& csv) {
    // runtime_ms is wall-clock and varies between runs; compare the rest.
    std::string out;
    size_t pos = 0;
    while (pos < csv.size()) {
        size_t end = csv.find('\n', pos);
        if (end == std::string::npos) end = csv.size();
        std::string line = csv.substr(pos, end - pos);
        int field = 0;
        std::string kept;
        size_t start = 0;
        for (size_t i = 0; i <= line.size(); i++) {
            if (i == line.size() || line[i] == ',') {
                if (field != 8) {
                    if (!kept.empty()) kept += ',';
                    kept += line.substr(start, i - start);
                }
                field++;
                start = i + 1;
            }
        }
        out += kept;
        out += '\n';
        pos = end + 1;
    }
    return out;
}

}  // namespace

TEST_CASE("csv writer quotes per RFC 4180 and keeps rows aligned") {
    CsvWriter csv({"a", "b"});
    csv.add_row({"plain", "with,comma"});
    csv.add_row({"with \"quote\"", "multi\nline"});
    CHECK(csv.to_string() ==
          "a,b\r\nplain,\"with,comma\"\r\n\"with \"\"quote\"\"\",\"multi\nline\"\r\n");
    CHECK_THROWS_AS(csv.add_row({"only-one"}), std::invalid_argument);
    CsvWriter empty({"x"});
    CHECK(empty.to_string() == "x\r\n");
}

TEST_CASE("benchmark rows are deterministic apart from wall-clock timing") {
    BenchOptions options;
    options.fixture = "corridor";
    options.k = 3;
    options.configs = {"none", "gc"};
    options.time_limit_seconds = 10;
    auto first = run_benchmark(options);
    auto second = run_benchmark(options);
    CHECK(strip_runtime_column(first.to_string()) == strip_runtime_column(second.to_string()));
}

TEST_CASE("percentage columns sum to 100 for solved rows with branches") {
    BenchOptions options;
    options.fixture = "rect";
    options.k = 5;
    options.configs = {"none", "rtc"};
    options.time_limit_seconds = 10;
    auto csv = run_benchmark(options);
    for (const auto& row : csv.rows()) {
        REQUIRE(row.size() == 13);
        if (row[4] != "1") continue;
        const uint64_t expanded = std::stoull(row[6]);
        if (expanded == 0) continue;
        double sum = 0;
        for (int i = 9; i < 13; i++) sum += std::stod(row[i]);
        CHECK(sum == doctest::Approx(100.0).epsilon(0.001));
    }
}

TEST_CASE("map and scenario files drive multi-instance runs") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "sympath-bench-test";
    fs::create_directories(dir);
    const auto map_path = (dir / "tiny.map").string();
    {
        std::ofstream out(map_path);
        out << fixtures::open_map(8, 8).serialize();
    }
    for (int i = 0; i < 2; i++) {
        std::ofstream out((dir / ("tiny-" + std::to_string(i + 1) + ".scen")).string());
        out << "version 1\n";
        out << "0 tiny.map 8 8 0 " << i << " 7 " << 7 - i << " 14.0\n";
        out << "0 tiny.map 8 8 7 " << i << " 0 " << 7 - i << " 14.0\n";
    }
    BenchOptions options;
    options.map_path = map_path;
    options.scen_paths = {(dir / "tiny-1.scen").string(), (dir / "tiny-2.scen").string()};
    options.agent_counts = {2};
    options.configs = {"none", "rtc"};
    options.time_limit_seconds = 10;
    options.out_path = (dir / "out.csv").string();
    auto csv = run_benchmark(options);
    CHECK(csv.rows().size() == 4);  // 2 scens x 1 agent count x 2 configs
    csv.write_file(options.out_path);
    std::ifstream check(options.out_path);
    std::string header;
    std::getline(check, header);
    CHECK(header.find("pct_vertex_edge") != std::string::npos);
    for (const auto& row : csv.rows()) CHECK(row[4] == "1");
}

TEST_CASE("unknown fixtures are rejected") {
    BenchOptions options;
    options.fixture = "nonsense";
    CHECK_THROWS_AS(build_bench_instances(options), std::invalid_argument);
}
