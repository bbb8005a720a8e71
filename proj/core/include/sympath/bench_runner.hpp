#pragma once

#include <optional>

#include "sympath/csv.hpp"
#include "sympath/solver.hpp"

namespace sympath {

/// Benchmark protocol shared by the CLI and the tests: a set of instances
/// (map/scen files or a built-in fixture), a set of solver configs, one CSV
/// row per (instance, config).
struct BenchOptions {
    std::string map_path;
    std::vector<std::string> scen_paths;  // one instance per scenario file
    std::vector<int> agent_counts;
    std::vector<std::string> configs;
    double time_limit_seconds = 60.0;
    uint64_t node_limit = UINT64_MAX;
    std::string out_path;  // empty: stdout

    // Built-in fixtures: corridor (--k), target (--d), rect (--k), pseudo,
    // crossing. When set, map/scen/agents are ignored.
    std::string fixture;
    std::optional<int> k;
    std::optional<int> d;

    int jobs = 1;
};

struct BenchInstance {
    std::string map_name;
    int agents = 0;
    int offset = 0;  // index of the scenario file the instance came from
    std::shared_ptr<const Instance> instance;
};

std::vector<BenchInstance> build_bench_instances(const BenchOptions& options);

/// One row per (instance, config), deterministic order; pct_* columns report
/// the share of branching events per symmetry class.
CsvWriter run_benchmark(const BenchOptions& options);

std::vector<std::string> bench_csv_header();
std::vector<std::string> bench_csv_row(const BenchInstance& bi, const std::string& config,
                                       const SolveStats& stats);

}  // namespace sympath
