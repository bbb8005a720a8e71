#include "sympath/instance.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace sympath {

Instance::Instance(GridMap map, std::vector<AgentSpec> agents)
    : map_(std::move(map)), agents_(std::move(agents)) {
    if (agents_.empty()) throw ParseError("instance needs at least one agent");
    std::set<Vertex> starts, targets;
    for (size_t i = 0; i < agents_.size(); i++) {
        const auto& a = agents_[i];
        if (!map_.passable(a.start) || !map_.passable(a.target))
            throw ParseError("agent " + std::to_string(i) + " has a blocked start or target");
        if (!starts.insert(a.start).second)
            throw ParseError("agent " + std::to_string(i) + " duplicates another start");
        if (!targets.insert(a.target).second)
            throw ParseError("agent " + std::to_string(i) + " duplicates another target");
    }
    for (size_t i = 0; i < agents_.size(); i++) {
        if (distance(agents_[i].start, agents_[i].target) >= kInfinity)
            throw ParseError("agent " + std::to_string(i) +
                             " cannot reach its target from its start");
    }
}

std::vector<AgentSpec> Instance::parse_scen(std::istream& in, const GridMap& map,
                                            int num_agents) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty scenario file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("version", 0) != 0) throw ParseError("line 1: expected `version ...` header");
    {
        std::istringstream ss(line);
        std::string key;
        int version = -1;
        ss >> key >> version;
        if (version != 1) throw ParseError("line 1: unsupported scenario version");
    }

    std::vector<AgentSpec> agents;
    int line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (num_agents >= 0 && static_cast<int>(agents.size()) >= num_agents) break;
        std::istringstream ss(line);
        int bucket, w, h, sx, sy, gx, gy;
        std::string map_name;
        double optimal;
        if (!(ss >> bucket >> map_name >> w >> h >> sx >> sy >> gx >> gy >> optimal))
            throw ParseError("line " + std::to_string(line_no) + ": malformed scenario row");
        auto check = [&](int x, int y, const char* what) {
            if (!map.in_bounds(x, y))
                throw ParseError("line " + std::to_string(line_no) + ": " + what +
                                 " out of bounds");
            if (map.blocked(x, y))
                throw ParseError("line " + std::to_string(line_no) + ": " + what +
                                 " on a blocked cell");
        };
        check(sx, sy, "start");
        check(gx, gy, "goal");
        agents.push_back({map.vertex(sx, sy), map.vertex(gx, gy)});
    }
    if (num_agents >= 0 && static_cast<int>(agents.size()) < num_agents)
        throw ParseError("scenario has only " + std::to_string(agents.size()) + " rows, need " +
                         std::to_string(num_agents));
    return agents;
}

Instance Instance::load(const std::string& map_path, const std::string& scen_path,
                        int num_agents) {
    GridMap map = GridMap::load(map_path);
    std::ifstream in(scen_path);
    if (!in) throw ParseError("cannot open scenario file " + scen_path);
    auto agents = parse_scen(in, map, num_agents);
    return Instance(std::move(map), std::move(agents));
}

const std::vector<int>& Instance::distances_from(Vertex source) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->tables.find(source);
        if (it != cache_->tables.end()) return *it->second;
    }
    auto table = std::make_shared<const std::vector<int>>(map_.true_distance(source));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto [it, _] = cache_->tables.emplace(source, std::move(table));
    return *it->second;
}

}  // namespace sympath
