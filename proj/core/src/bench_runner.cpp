#include "sympath/bench_runner.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "sympath/fixtures.hpp"

namespace sympath {

std::vector<BenchInstance> build_bench_instances(const BenchOptions& options) {
    std::vector<BenchInstance> out;
    if (!options.fixture.empty()) {
        BenchInstance bi;
        if (options.fixture == "corridor") {
            const int k = options.k.value_or(3);
            bi.map_name = "corridor-k" + std::to_string(k);
            bi.instance = std::make_shared<Instance>(fixtures::head_on_corridor(k));
        } else if (options.fixture == "target") {
            const int d = options.d.value_or(3);
            bi.map_name = "target-d" + std::to_string(d);
            bi.instance = std::make_shared<Instance>(fixtures::parked_blocker(d));
        } else if (options.fixture == "rect") {
            const int n = options.k.value_or(4);
            bi.map_name = "rect-n" + std::to_string(n);
            bi.instance = std::make_shared<Instance>(fixtures::square_crossing(n));
        } else if (options.fixture == "pseudo") {
            bi.map_name = "pseudo";
            bi.instance = std::make_shared<Instance>(fixtures::one_edge_squeeze());
        } else if (options.fixture == "crossing") {
            bi.map_name = "crossing";
            bi.instance = std::make_shared<Instance>(fixtures::small_crossing());
        } else {
            throw std::invalid_argument("unknown fixture `" + options.fixture + "`");
        }
        bi.agents = bi.instance->num_agents();
        out.push_back(std::move(bi));
        return out;
    }

    if (options.map_path.empty()) throw std::invalid_argument("missing --map or --fixture");
    GridMap map = GridMap::load(options.map_path);
    std::string map_name = options.map_path;
    if (auto slash = map_name.find_last_of('/'); slash != std::string::npos)
        map_name = map_name.substr(slash + 1);

    for (int offset = 0; offset < static_cast<int>(options.scen_paths.size()); offset++) {
        for (int agents : options.agent_counts) {
            BenchInstance bi;
            bi.map_name = map_name;
            bi.agents = agents;
            bi.offset = offset;
            bi.instance = std::make_shared<Instance>(
                Instance::load(options.map_path, options.scen_paths[offset], agents));
            out.push_back(std::move(bi));
        }
    }
    return out;
}

std::vector<std::string> bench_csv_header() {
    return {"map",       "agents",    "offset",     "config",       "solved",
            "soc",       "expanded",  "generated",  "runtime_ms",   "pct_rectangle",
            "pct_target", "pct_corridor", "pct_vertex_edge"};
}

namespace {

std::string pct(uint64_t part, uint64_t total) {
    char buf[32];
    const double value = total == 0 ? 0.0 : 100.0 * static_cast<double>(part) / total;
    std::snprintf(buf, sizeof(buf), "%.3f", value);
    return buf;
}

}  // namespace

std::vector<std::string> bench_csv_row(const BenchInstance& bi, const std::string& config,
                                       const SolveStats& stats) {
    const uint64_t branched = stats.branched_with_class();
    return {
        bi.map_name,
        std::to_string(bi.agents),
        std::to_string(bi.offset),
        config,
        stats.solved ? "1" : "0",
        std::to_string(stats.solved ? stats.soc : -1),
        std::to_string(stats.expanded),
        std::to_string(stats.generated),
        std::to_string(static_cast<long long>(std::llround(stats.runtime_seconds * 1000.0))),
        pct(stats.branches_by_class[static_cast<size_t>(SymmetryClass::rectangle)], branched),
        pct(stats.branches_by_class[static_cast<size_t>(SymmetryClass::target)], branched),
        pct(stats.branches_by_class[static_cast<size_t>(SymmetryClass::corridor)], branched),
        pct(stats.branches_by_class[static_cast<size_t>(SymmetryClass::vertex_edge)], branched),
    };
}

CsvWriter run_benchmark(const BenchOptions& options) {
    const auto instances = build_bench_instances(options);

    struct Task {
        size_t instance_idx;
        size_t config_idx;
        SolveStats stats;
    };
    std::vector<Task> tasks;
    for (size_t i = 0; i < instances.size(); i++)
        for (size_t c = 0; c < options.configs.size(); c++) tasks.push_back({i, c, {}});

    auto run_task = [&](Task& task) {
        SolverConfig config = SolverConfig::from_name(options.configs[task.config_idx]);
        config.time_limit_seconds = options.time_limit_seconds;
        config.node_limit = options.node_limit;
        CbsSolver solver(*instances[task.instance_idx].instance, config);
        task.stats = solver.solve().stats;
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (auto& task : tasks) run_task(task);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; w++) {
            workers.emplace_back([&] {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    run_task(tasks[i]);
                }
            });
        }
        for (auto& worker : workers) worker.join();
    }

    CsvWriter csv(bench_csv_header());
    for (const auto& task : tasks)
        csv.add_row(bench_csv_row(instances[task.instance_idx], options.configs[task.config_idx],
                                  task.stats));
    return csv;
}

}  // namespace sympath
