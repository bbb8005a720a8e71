#include "sympath/corridor.hpp"

#include <algorithm>
#include <cassert>

namespace sympath {

bool Corridor::contains(Vertex v) const {
    return std::find(chain.begin(), chain.end(), v) != chain.end();
}

int Corridor::position_of(Vertex v) const {
    auto it = std::find(chain.begin(), chain.end(), v);
    return it == chain.end() ? -1 : static_cast<int>(it - chain.begin());
}

namespace {

bool is_stop_vertex(Vertex v, const Conflict& c, const Instance& instance) {
    for (int a : {c.a1, c.a2}) {
        if (instance.agent(a).start == v || instance.agent(a).target == v) return true;
    }
    return false;
}

}  // namespace

std::optional<Corridor> find_corridor(const Conflict& c, const Instance& instance,
                                      CorridorChainMode mode) {
    const GridMap& map = instance.map();
    auto interior = [&](Vertex v) {
        if (map.degree(v) != 2) return false;
        if (mode == CorridorChainMode::basic && is_stop_vertex(v, c, instance)) return false;
        return true;
    };

    Vertex seed = kNoVertex;
    if (!c.is_edge) {
        if (interior(c.v)) seed = c.v;
    } else {
        if (interior(c.u))
            seed = c.u;
        else if (interior(c.v))
            seed = c.v;
    }
    if (seed == kNoVertex) {
        if (!c.is_edge) return std::nullopt;  // single cell, nothing to chain
        Corridor corridor;
        corridor.chain = {c.u, c.v};  // length-1 corridor for pseudo screening
        return corridor;
    }

    // Walk outward from the seed in both directions; the first non-interior
    // vertex on each side becomes an endpoint.
    auto [nbr, n] = map.neighbors(seed);
    assert(n == 2);
    std::vector<Vertex> chain{nbr[0], seed};
    Vertex prev = nbr[0];
    while (interior(chain.back())) {
        auto [nb, cnt] = map.neighbors(chain.back());
        Vertex next = kNoVertex;
        for (int i = 0; i < cnt; i++)
            if (nb[i] != prev) next = nb[i];
        if (next == kNoVertex) break;  // dead-end endpoint of degree 1
        if (std::find(chain.begin(), chain.end(), next) != chain.end())
            return std::nullopt;  // degree-2 ring, no endpoints
        prev = chain.back();
        chain.push_back(next);
    }
    prev = seed;
    while (interior(chain.front())) {
        auto [nb, cnt] = map.neighbors(chain.front());
        Vertex next = kNoVertex;
        for (int i = 0; i < cnt; i++)
            if (nb[i] != prev) next = nb[i];
        if (next == kNoVertex) break;
        if (std::find(chain.begin(), chain.end(), next) != chain.end())
            return std::nullopt;  // ring
        prev = chain.front();
        chain.insert(chain.begin(), next);
    }
    Corridor corridor;
    corridor.chain = std::move(chain);
    return corridor;
}

namespace {

// Entrance vertex: the agent's start if it lies in the corridor, otherwise
// the chain vertex by which its path last entered before the conflict.
Vertex entrance_of(int agent, const Conflict& c, const Corridor& corridor,
                   ReasoningContext& ctx) {
    if (corridor.contains(ctx.instance().agent(agent).start))
        return ctx.instance().agent(agent).start;
    const Path& p = ctx.path(agent);
    int t = std::min(c.t, path_length(p));
    while (t > 0 && corridor.contains(p[t - 1])) t--;
    return position_at(p, t);
}

// Exit vertex: the agent's target if it lies in the corridor, otherwise the
// chain vertex from which its path first leaves at or after the conflict.
Vertex exit_of(int agent, const Conflict& c, const Corridor& corridor, ReasoningContext& ctx) {
    if (corridor.contains(ctx.instance().agent(agent).target))
        return ctx.instance().agent(agent).target;
    const Path& p = ctx.path(agent);
    const int len = path_length(p);
    int t = std::min(c.t, len);
    while (t < len && corridor.contains(p[t + 1])) t++;
    return position_at(p, t);
}

TravelExclusions chain_exclusions(const Corridor& corridor) {
    TravelExclusions ex;
    for (size_t i = 0; i + 1 < corridor.chain.size(); i++)
        ex.edges.push_back({corridor.chain[i], corridor.chain[i + 1]});
    return ex;
}

int safe_add(int a, int b) {
    if (a >= kInfinity || b >= kInfinity) return kInfinity;
    return a + b;
}

bool emit_gate(const CorridorFinding& f, const Conflict& c, ReasoningContext& ctx) {
    for (const auto& constraint : f.set1)
        if (const auto* r = std::get_if<RangeConstraint>(&constraint.body); r != nullptr)
            if (r->t_max < r->t_min) return false;
    for (const auto& constraint : f.set2)
        if (const auto* r = std::get_if<RangeConstraint>(&constraint.body); r != nullptr)
            if (r->t_max < r->t_min) return false;
    bool violates1 = false, violates2 = false;
    for (const auto& constraint : f.set1)
        violates1 |= violates(constraint, c.a1, ctx.path(c.a1), ctx.instance());
    for (const auto& constraint : f.set2)
        violates2 |= violates(constraint, c.a2, ctx.path(c.a2), ctx.instance());
    return violates1 && violates2;
}

}  // namespace

bool must_cross(const Conflict& c, const Corridor& corridor, ReasoningContext& ctx) {
    const Vertex b1 = entrance_of(c.a1, c, corridor, ctx);
    const Vertex b2 = entrance_of(c.a2, c, corridor, ctx);
    Vertex e1 = exit_of(c.a1, c, corridor, ctx);
    Vertex e2 = exit_of(c.a2, c, corridor, ctx);
    if (b1 == b2 || e1 == e2) return false;
    const int pb1 = corridor.position_of(b1);
    const int pb2 = corridor.position_of(b2);
    const int pe1 = corridor.position_of(e1);
    const int pe2 = corridor.position_of(e2);
    if (pb1 < 0 || pb2 < 0 || pe1 < 0 || pe2 < 0) return false;
    const int db = pb2 - pb1;
    const int de = pe2 - pe1;
    return (db > 0 && de < 0) || (db < 0 && de > 0);
}

std::optional<CorridorFinding> pseudo_corridor_reasoning(const Conflict& c,
                                                         ReasoningContext& ctx) {
    const Mdd& mdd1 = ctx.mdd(c.a1);
    const Mdd& mdd2 = ctx.mdd(c.a2);
    auto singleton_at = [&](const Mdd& mdd, int t) -> Vertex {
        if (t < 0) return kNoVertex;
        if (t > mdd.cost()) t = mdd.cost();
        auto layer = mdd.layer(t);
        return layer.size() == 1 ? layer[0] : kNoVertex;
    };

    Vertex e1 = kNoVertex, e2 = kNoVertex;
    if (!c.is_edge) {
        const Vertex m1_prev = singleton_at(mdd1, c.t - 1);
        const Vertex m1_at = singleton_at(mdd1, c.t);
        const Vertex m1_next = singleton_at(mdd1, c.t + 1);
        const Vertex m2_prev = singleton_at(mdd2, c.t - 1);
        const Vertex m2_at = singleton_at(mdd2, c.t);
        const Vertex m2_next = singleton_at(mdd2, c.t + 1);
        if (m1_prev == kNoVertex || m1_at == kNoVertex || m1_next == kNoVertex ||
            m2_prev == kNoVertex || m2_at == kNoVertex || m2_next == kNoVertex)
            return std::nullopt;
        if (m1_prev != m2_next || m2_prev != m1_next) return std::nullopt;
        e1 = c.v;
        e2 = m1_prev;
    } else {
        if (singleton_at(mdd1, c.t - 1) != c.u || singleton_at(mdd1, c.t) != c.v)
            return std::nullopt;
        if (singleton_at(mdd2, c.t - 1) != c.v || singleton_at(mdd2, c.t) != c.u)
            return std::nullopt;
        e1 = c.v;  // a1 moves u -> v
        e2 = c.u;
    }
    if (e1 == e2 || e1 == kNoVertex) return std::nullopt;

    TravelExclusions ex;
    ex.edges.push_back({e1, e2});
    const int t1 = ctx.earliest_arrival(c.a1, e1);
    const int t2 = ctx.earliest_arrival(c.a2, e2);
    const int t1_bypass = ctx.earliest_arrival(c.a1, e1, &ex);
    const int t2_bypass = ctx.earliest_arrival(c.a2, e2, &ex);

    CorridorFinding f;
    f.flavor = CorridorFlavor::pseudo;
    f.cardinality = Cardinality::cardinal;
    f.set1.push_back(
        {c.a1, RangeConstraint{e1, 0, std::min(t1_bypass - 1, safe_add(t2, 1))}});
    f.set2.push_back(
        {c.a2, RangeConstraint{e2, 0, std::min(t2_bypass - 1, safe_add(t1, 1))}});
    if (!emit_gate(f, c, ctx)) return std::nullopt;
    return f;
}

namespace {

std::optional<CorridorFinding> basic_constraints(const Conflict& c, const Corridor& corridor,
                                                 ReasoningContext& ctx) {
    const Vertex e1 = exit_of(c.a1, c, corridor, ctx);
    const Vertex e2 = exit_of(c.a2, c, corridor, ctx);
    if (e1 == e2) return std::nullopt;
    const int k = ctx.instance().distance(e1, e2);
    TravelExclusions ex = chain_exclusions(corridor);
    const int t1 = ctx.earliest_arrival(c.a1, e1);
    const int t2 = ctx.earliest_arrival(c.a2, e2);
    const int t1_bypass = ctx.earliest_arrival(c.a1, e1, &ex);
    const int t2_bypass = ctx.earliest_arrival(c.a2, e2, &ex);
    if (k >= kInfinity) return std::nullopt;

    CorridorFinding f;
    f.flavor = CorridorFlavor::basic;
    f.cardinality = ctx.classify(c);
    f.set1.push_back(
        {c.a1, RangeConstraint{e1, 0, std::min(t1_bypass - 1, safe_add(t2, k))}});
    f.set2.push_back(
        {c.a2, RangeConstraint{e2, 0, std::min(t2_bypass - 1, safe_add(t1, k))}});
    if (!emit_gate(f, c, ctx)) return std::nullopt;
    return f;
}

std::optional<CorridorFinding> corridor_target_constraints(const Conflict& c,
                                                           const Corridor& corridor,
                                                           ReasoningContext& ctx) {
    const Instance& instance = ctx.instance();
    const bool inside1 = corridor.contains(instance.agent(c.a1).target);
    const bool inside2 = corridor.contains(instance.agent(c.a2).target);
    // a1 is relabeled to the agent whose target is inside.
    int a1 = c.a1, a2 = c.a2;
    if (!inside1) std::swap(a1, a2);
    const Vertex g1 = instance.agent(a1).target;
    const Vertex g2 = instance.agent(a2).target;

    int l = kInfinity;
    for (Vertex endpoint : {corridor.chain.front(), corridor.chain.back()}) {
        const int t1 = ctx.earliest_arrival(a1, endpoint);
        const int t2 = ctx.earliest_arrival(a2, endpoint);
        const int dist = instance.distance(endpoint, g1);
        const int reach = safe_add(std::max(t1 - 1, t2), dist);
        l = std::min(l, reach);
    }
    if (l >= kInfinity) return std::nullopt;

    CorridorFinding f;
    f.cardinality = ctx.classify(c);
    f.set1.push_back({a1, LengthLowerConstraint{l}});
    f.set2.push_back({a1, LengthUpperConstraint{l}});
    if (inside1 && inside2) {
        f.flavor = CorridorFlavor::corridor_target_two;
        TravelExclusions avoid_g1;
        avoid_g1.vertices.push_back(g1);
        const int t2_bypass = ctx.earliest_arrival(a2, g2, &avoid_g1);
        if (t2_bypass >= kInfinity) {
            f.set2.push_back({a2, LengthLowerConstraint{kInfinity}});
        } else {
            f.set2.push_back({a2, LengthLowerConstraint{t2_bypass - 1}});
        }
    } else {
        f.flavor = CorridorFlavor::corridor_target_one;
        const Vertex e2 = exit_of(a2, c, corridor, ctx);
        TravelExclusions ex = chain_exclusions(corridor);
        const int t2_bypass = ctx.earliest_arrival(a2, e2, &ex);
        if (t2_bypass >= kInfinity) {
            f.set2.push_back({a2, RangeConstraint{e2, 0, kInfinity}});
        } else {
            f.set2.push_back({a2, RangeConstraint{e2, 0, t2_bypass - 1}});
        }
    }
    // The gate checks the conflict's own labeling: map back.
    CorridorFinding gated = f;
    if (a1 != c.a1) std::swap(gated.set1, gated.set2);
    if (!emit_gate(gated, c, ctx)) return std::nullopt;
    return gated;
}

}  // namespace

std::optional<CorridorFinding> corridor_reasoning(const Conflict& c, ReasoningContext& ctx,
                                                  CorridorReasoningMode mode) {
    const bool chain_generalized = mode == CorridorReasoningMode::start_target ||
                                   mode == CorridorReasoningMode::generalized;
    const bool pseudo_enabled =
        mode == CorridorReasoningMode::pseudo || mode == CorridorReasoningMode::generalized;

    auto corridor = find_corridor(c, ctx.instance(),
                                  chain_generalized ? CorridorChainMode::generalized
                                                    : CorridorChainMode::basic);
    if (!corridor || corridor->length() <= 1) {
        if (pseudo_enabled) return pseudo_corridor_reasoning(c, ctx);
        return std::nullopt;
    }
    if (!must_cross(c, *corridor, ctx)) return std::nullopt;

    if (chain_generalized) {
        const bool inside1 = corridor->contains(ctx.instance().agent(c.a1).target);
        const bool inside2 = corridor->contains(ctx.instance().agent(c.a2).target);
        if (inside1 || inside2) return corridor_target_constraints(c, *corridor, ctx);
    }
    return basic_constraints(c, *corridor, ctx);
}

}  // namespace sympath
