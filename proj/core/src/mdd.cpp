#include "sympath/mdd.hpp"

#include <algorithm>
#include <sstream>

namespace sympath {

Mdd Mdd::build(const Instance& instance, int agent, const ConstraintTable& table, int cost) {
    Mdd mdd;
    const Vertex start = instance.agent(agent).start;
    const Vertex target = instance.agent(agent).target;
    if (cost < 0 || table.infeasible()) return mdd;
    if (cost < table.min_length() || cost > table.max_length()) return mdd;
    if (!table.vertex_allowed(start, 0) || !table.can_park(target, cost)) return mdd;
    const auto& dist = instance.distances_from(target);
    if (dist[start] > cost) return mdd;

    // Forward reachability, pruned by remaining distance to the target.
    std::vector<std::vector<Vertex>> fwd(cost + 1);
    fwd[0].push_back(start);
    std::unordered_set<uint64_t> present;
    auto key = [](Vertex v, int t) { return (static_cast<uint64_t>(v) << 32) | static_cast<uint32_t>(t); };
    present.insert(key(start, 0));
    for (int t = 0; t < cost; t++) {
        for (Vertex v : fwd[t]) {
            auto try_step = [&](Vertex w) {
                if (dist[w] >= kInfinity || dist[w] > cost - (t + 1)) return;
                if (!table.vertex_allowed(w, t + 1)) return;
                if (w != v && !table.edge_allowed(v, w, t + 1)) return;
                if (t + 1 == cost && w == target && v == target) return;  // trailing wait
                if (present.insert(key(w, t + 1)).second) fwd[t + 1].push_back(w);
            };
            auto [nbr, n] = instance.map().neighbors(v);
            for (int i = 0; i < n; i++) try_step(nbr[i]);
            try_step(v);
        }
    }
    if (!present.count(key(target, cost))) return mdd;

    // Backward sweep from (target, cost); keep only nodes on a full path.
    std::vector<std::vector<Vertex>> layers(cost + 1);
    std::unordered_set<uint64_t> alive;
    layers[cost].push_back(target);
    alive.insert(key(target, cost));
    for (int t = cost - 1; t >= 0; t--) {
        for (Vertex v : fwd[t]) {
            auto reaches = [&](Vertex w) {
                if (!alive.count(key(w, t + 1))) return false;
                if (!table.vertex_allowed(w, t + 1)) return false;
                if (w != v && !table.edge_allowed(v, w, t + 1)) return false;
                if (t + 1 == cost && w == target && v == target) return false;
                return true;
            };
            bool keep = reaches(v);
            if (!keep) {
                auto [nbr, n] = instance.map().neighbors(v);
                for (int i = 0; i < n && !keep; i++) keep = reaches(nbr[i]);
            }
            if (keep) {
                layers[t].push_back(v);
                alive.insert(key(v, t));
            }
        }
    }
    for (auto& layer : layers) std::sort(layer.begin(), layer.end());

    mdd.layers_ = std::move(layers);
    mdd.children_.assign(mdd.layers_.size(), {});
    for (int t = 0; t < cost; t++) {
        mdd.children_[t].resize(mdd.layers_[t].size());
        for (size_t i = 0; i < mdd.layers_[t].size(); i++) {
            Vertex v = mdd.layers_[t][i];
            auto add = [&](Vertex w) {
                if (!alive.count(key(w, t + 1))) return;
                if (!table.vertex_allowed(w, t + 1)) return;
                if (w != v && !table.edge_allowed(v, w, t + 1)) return;
                if (t + 1 == cost && w == target && v == target) return;
                mdd.children_[t][i].push_back(w);
            };
            auto [nbr, n] = instance.map().neighbors(v);
            for (int j = 0; j < n; j++) add(nbr[j]);
            add(v);
            std::sort(mdd.children_[t][i].begin(), mdd.children_[t][i].end());
        }
    }
    return mdd;
}

int Mdd::index_of(Vertex v, int t) const {
    if (t < 0 || t >= num_layers()) return -1;
    const auto& layer = layers_[t];
    auto it = std::lower_bound(layer.begin(), layer.end(), v);
    if (it == layer.end() || *it != v) return -1;
    return static_cast<int>(it - layer.begin());
}

bool Mdd::contains(Vertex v, int t) const { return index_of(v, t) >= 0; }

std::span<const Vertex> Mdd::successors(Vertex v, int t) const {
    int i = index_of(v, t);
    if (i < 0 || t >= cost()) return {};
    return children_[t][i];
}

std::vector<SpaceTimeNode> Mdd::singletons() const {
    std::vector<SpaceTimeNode> out;
    for (int t = 0; t < num_layers(); t++)
        if (layers_[t].size() == 1) out.push_back({layers_[t][0], t});
    return out;
}

bool Mdd::blocks_all_paths(std::span<const SpaceTimeNode> prohibited) const {
    if (empty()) return true;
    std::unordered_set<uint64_t> banned;
    auto key = [](Vertex v, int t) { return (static_cast<uint64_t>(v) << 32) | static_cast<uint32_t>(t); };
    for (const auto& n : prohibited) banned.insert(key(n.v, n.t));

    std::vector<Vertex> frontier;
    if (!banned.count(key(layers_[0][0], 0))) frontier.push_back(layers_[0][0]);
    for (int t = 0; t < cost() && !frontier.empty(); t++) {
        std::vector<Vertex> next;
        for (Vertex v : frontier) {
            for (Vertex w : successors(v, t)) {
                if (banned.count(key(w, t + 1))) continue;
                if (!std::binary_search(next.begin(), next.end(), w)) {
                    next.insert(std::upper_bound(next.begin(), next.end(), w), w);
                }
            }
        }
        frontier = std::move(next);
    }
    return frontier.empty();
}

std::string Mdd::dump() const {
    std::ostringstream out;
    for (int t = 0; t < num_layers(); t++) {
        out << t << ":";
        for (Vertex v : layers_[t]) out << " " << v;
        out << "\n";
    }
    return out.str();
}

std::shared_ptr<const Mdd> MddCache::get(const Instance& instance, int agent,
                                         std::span<const Constraint> constraints,
                                         const ConstraintTable& table, int cost) {
    std::string sig = "a" + std::to_string(agent) + "|" + std::to_string(cost) + "|" +
                      constraint_signature(constraints, agent, instance);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(sig);
    if (it != cache_.end()) return it->second;
    if (cache_.size() > 4096) cache_.clear();
    auto mdd = std::make_shared<const Mdd>(Mdd::build(instance, agent, table, cost));
    cache_.emplace(std::move(sig), mdd);
    return mdd;
}

void MddCache::clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.clear();
}

}  // namespace sympath
