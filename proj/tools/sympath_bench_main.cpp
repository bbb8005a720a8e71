#include <CLI11.hpp>
#include <iostream>

#include "sympath/bench_runner.hpp"

using namespace sympath;

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "MAPF benchmark runner: optimal CBS with symmetry reasoning, one CSV row per "
        "(instance, config)"};

    std::string map_path, scen_list, agents_list, configs_list = "none", out_path;
    std::string fixture;
    double time_limit = 60.0;
    uint64_t node_limit = UINT64_MAX;
    int k = -1, d = -1, jobs = 1;

    app.add_option("--map", map_path, "movingai .map file");
    app.add_option("--scen", scen_list, "movingai .scen file(s), comma separated");
    app.add_option("--agents", agents_list, "agent counts, e.g. 20 or 20,30,40");
    app.add_option("--configs", configs_list,
                   "solver configs: none|r|rm|gr|t|c|pc|stc|gc|rtc|cbsh2|cbsh2-rtc");
    app.add_option("--time-limit", time_limit, "per-solve time limit in seconds");
    app.add_option("--node-limit", node_limit, "per-solve CT expansion limit");
    app.add_option("--out", out_path, "CSV output path (default: stdout)");
    app.add_option("--fixture", fixture,
                   "built-in instance: corridor|target|rect|pseudo|crossing");
    app.add_option("--k", k, "fixture size parameter (corridor length / square side)");
    app.add_option("--d", d, "fixture distance parameter (target fixture)");
    app.add_option("--jobs", jobs, "parallel solves");

    CLI11_PARSE(app, argc, argv);

    BenchOptions options;
    options.map_path = map_path;
    options.scen_paths = split_list(scen_list);
    for (const auto& a : split_list(agents_list)) {
        try {
            options.agent_counts.push_back(std::stoi(a));
        } catch (const std::exception&) {
            std::cerr << "error: bad agent count `" << a << "`\n";
            return 2;
        }
    }
    options.configs = split_list(configs_list);
    options.time_limit_seconds = time_limit;
    options.node_limit = node_limit;
    options.out_path = out_path;
    options.fixture = fixture;
    if (k >= 0) options.k = k;
    if (d >= 0) options.d = d;
    options.jobs = jobs;

    try {
        for (const auto& name : options.configs) SolverConfig::from_name(name);
        CsvWriter csv = run_benchmark(options);
        if (out_path.empty())
            std::cout << csv.to_string();
        else
            csv.write_file(out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
