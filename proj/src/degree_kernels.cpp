#include "vck/degree_kernels.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "vck/classic_kernels.hpp"

namespace vck {

namespace {

TraceEvent delete_event(RuleTag rule, Graph& g, const VertexSet& doomed, int delta,
                        TracePayload payload) {
    TraceEvent e;
    e.rule = rule;
    e.budget_delta = delta;
    e.payload = std::move(payload);
    for (VertexId v : doomed) {
        const VertexSet& nbrs = g.neighbors(v);
        e.deleted.emplace_back(v, std::vector<VertexId>(nbrs.begin(), nbrs.end()));
    }
    for (VertexId v : doomed) g.remove_vertex(v);
    return e;
}

// Adds u-w for every w in targets that survives in g, recording new edges.
void add_edges_to(Graph& g, TraceEvent& e, VertexId u, const VertexSet& targets) {
    for (VertexId w : targets) {
        if (w == u || !g.has_vertex(w) || g.has_edge(u, w)) continue;
        g.add_edge(u, w);
        e.added_edges.emplace_back(std::min(u, w), std::max(u, w));
    }
}

}  // namespace

KernelOutcome apply_pendant_at(Instance inst, VertexId leaf) {
    if (!inst.graph.has_vertex(leaf) || inst.graph.degree(leaf) != 1)
        throw std::logic_error("pendant: vertex is not a degree-1 vertex");
    VertexId support = *inst.graph.neighbors(leaf).begin();
    if (inst.budget == 0) return KernelOutcome::no();
    ReductionTrace trace;
    trace.append(delete_event(RuleTag::Pendant, inst.graph, {leaf, support}, 1,
                              PendantPayload{leaf, support}));
    --inst.budget;
    return KernelOutcome::settle(std::move(inst), std::move(trace));
}

KernelOutcome rule_pendant(Instance inst) {
    for (VertexId v : inst.graph.vertices())
        if (inst.graph.degree(v) == 1) return apply_pendant_at(std::move(inst), v);
    return KernelOutcome::settle(std::move(inst), {});
}

namespace {

bool dominates(const Graph& g, VertexId u, VertexId v) {
    // adjacent u, v with N(v) inside N[u]
    if (!g.has_edge(u, v)) return false;
    for (VertexId w : g.neighbors(v))
        if (w != u && !g.has_edge(u, w)) return false;
    return true;
}

}  // namespace

KernelOutcome apply_dominance_at(Instance inst, VertexId u, VertexId v) {
    if (!inst.graph.has_vertex(u) || !inst.graph.has_vertex(v) || !dominates(inst.graph, u, v))
        throw std::logic_error("dominance: N(v) is not contained in N[u]");
    if (inst.budget == 0) return KernelOutcome::no();
    ReductionTrace trace;
    trace.append(
        delete_event(RuleTag::Dominance, inst.graph, {u}, 1, DominancePayload{u, v}));
    --inst.budget;
    return KernelOutcome::settle(std::move(inst), std::move(trace));
}

KernelOutcome rule_dominance(Instance inst) {
    for (VertexId u : inst.graph.vertices())
        for (VertexId v : inst.graph.neighbors(u))
            if (dominates(inst.graph, u, v)) return apply_dominance_at(std::move(inst), u, v);
    return KernelOutcome::settle(std::move(inst), {});
}

KernelOutcome apply_degree_two_at(Instance inst, VertexId v) {
    if (!inst.graph.has_vertex(v) || inst.graph.degree(v) != 2)
        throw std::logic_error("degree-2 fold: vertex does not have degree 2");
    auto it = inst.graph.neighbors(v).begin();
    VertexId a = *it++;
    VertexId b = *it;
    if (inst.graph.has_edge(a, b))
        throw std::logic_error("degree-2 fold: neighbors are adjacent (dominance applies)");
    if (inst.budget == 0) return KernelOutcome::no();

    TraceEvent e;
    e.rule = RuleTag::Degree2Contract;
    e.budget_delta = 1;
    for (VertexId w : {v, a, b}) {
        const VertexSet& nbrs = inst.graph.neighbors(w);
        e.deleted.emplace_back(w, std::vector<VertexId>(nbrs.begin(), nbrs.end()));
    }
    VertexId z = inst.graph.contract({v, a, b});
    const VertexSet& znbrs = inst.graph.neighbors(z);
    e.created.emplace_back(z, std::vector<VertexId>(znbrs.begin(), znbrs.end()));
    e.payload = Degree2Payload{v, a, b, z};
    --inst.budget;
    ReductionTrace trace;
    trace.append(std::move(e));
    return KernelOutcome::settle(std::move(inst), std::move(trace));
}

KernelOutcome rule_degree_two(Instance inst) {
    for (VertexId v : inst.graph.vertices()) {
        if (inst.graph.degree(v) != 2) continue;
        auto it = inst.graph.neighbors(v).begin();
        VertexId a = *it++;
        VertexId b = *it;
        if (!inst.graph.has_edge(a, b)) return apply_degree_two_at(std::move(inst), v);
    }
    return KernelOutcome::settle(std::move(inst), {});
}

namespace {

// Non-edges of G[c1, c2] when they hit every c1 vertex exactly once;
// otherwise nullopt.
std::optional<std::vector<Edge>> comatching(const Graph& g, const VertexSet& c1,
                                            const VertexSet& c2) {
    std::vector<Edge> m;
    for (VertexId x : c1) {
        int hits = 0;
        for (VertexId y : c2)
            if (!g.has_edge(x, y)) {
                m.emplace_back(x, y);
                ++hits;
            }
        if (hits != 1) return std::nullopt;
    }
    return m;
}

}  // namespace

KernelOutcome apply_clique_comatching_at(Instance inst, VertexId v, const VertexSet& c1,
                                         const VertexSet& c2) {
    const Graph& g = inst.graph;
    if (!g.has_vertex(v)) throw std::logic_error("clique/co-matching: unknown vertex");
    VertexSet nbhd = g.neighbors(v);
    VertexSet merged = c1;
    merged.insert(c2.begin(), c2.end());
    if (merged != nbhd || c1.size() + c2.size() != nbhd.size() || c1.size() < c2.size() ||
        c2.empty())
        throw std::logic_error("clique/co-matching: (C1, C2) does not partition N(v)");
    if (!is_clique(g, c1) || !is_clique(g, c2))
        throw std::logic_error("clique/co-matching: parts are not cliques");
    auto m = comatching(g, c1, c2);
    if (!m)
        throw std::logic_error("clique/co-matching: non-edges do not hit C1 exactly once each");

    if (inst.budget < static_cast<int>(c2.size())) return KernelOutcome::no();

    // (x, former neighbors of its partner) pairs, snapshotted before deletion.
    std::vector<std::pair<VertexId, VertexSet>> pending;
    for (const auto& [x, y] : *m) pending.emplace_back(x, inst.graph.neighbors(y));

    VertexSet doomed = c2;
    doomed.insert(v);
    TraceEvent e = delete_event(RuleTag::CliqueComatching, inst.graph, doomed,
                                static_cast<int>(c2.size()),
                                CliqueComatchingPayload{v, c1, c2, *m});
    for (const auto& [x, targets] : pending) add_edges_to(inst.graph, e, x, targets);
    inst.budget -= static_cast<int>(c2.size());
    ReductionTrace trace;
    trace.append(std::move(e));
    return KernelOutcome::settle(std::move(inst), std::move(trace));
}

KernelOutcome rule_clique_comatching(Instance inst, int max_degree) {
    if (max_degree > 4 || max_degree < 0)
        throw std::invalid_argument("clique/co-matching: max_degree must be in [0..4]");
    for (VertexId v : inst.graph.vertices()) {
        auto deg = inst.graph.degree(v);
        if (deg < 1 || deg > static_cast<std::size_t>(max_degree)) continue;
        std::vector<VertexId> nb(inst.graph.neighbors(v).begin(), inst.graph.neighbors(v).end());
        for (std::uint32_t mask = 1; mask < (1u << deg); ++mask) {
            VertexSet c1, c2;
            for (std::size_t i = 0; i < deg; ++i)
                ((mask >> i) & 1u ? c2 : c1).insert(nb[i]);
            if (c1.size() < c2.size() || c1.empty()) continue;
            if (!is_clique(inst.graph, c1) || !is_clique(inst.graph, c2)) continue;
            if (!comatching(inst.graph, c1, c2)) continue;
            return apply_clique_comatching_at(std::move(inst), v, c1, c2);
        }
    }
    return KernelOutcome::settle(std::move(inst), {});
}

KernelOutcome apply_degree_three_at(Instance inst, VertexId v) {
    const Graph& g = inst.graph;
    if (!g.has_vertex(v) || g.degree(v) != 3)
        throw std::logic_error("degree-3 rewire: vertex does not have degree 3");
    VertexSet nbhd = g.neighbors(v);
    if (!is_independent_set(g, nbhd))
        throw std::logic_error(
            "degree-3 rewire: neighborhood not independent (dominance or clique/co-matching "
            "applies)");
    auto it = nbhd.begin();
    VertexId a = *it++;
    VertexId b = *it++;
    VertexId c = *it;
    VertexSet na = g.neighbors(a), nb = g.neighbors(b), nc = g.neighbors(c);

    TraceEvent e = delete_event(RuleTag::Degree3Rewire, inst.graph, {v}, 0,
                                Degree3Payload{v, a, b, c});
    add_edges_to(inst.graph, e, a, {b});
    add_edges_to(inst.graph, e, b, {c});
    add_edges_to(inst.graph, e, a, nb);
    add_edges_to(inst.graph, e, b, nc);
    add_edges_to(inst.graph, e, c, na);
    ReductionTrace trace;
    trace.append(std::move(e));
    return KernelOutcome::settle(std::move(inst), std::move(trace));
}

KernelOutcome rule_degree_three(Instance inst) {
    for (VertexId v : inst.graph.vertices())
        if (inst.graph.degree(v) == 3) return apply_degree_three_at(std::move(inst), v);
    return KernelOutcome::settle(std::move(inst), {});
}

KernelOutcome apply_degree_four_path_at(Instance inst, VertexId v) {
    const Graph& g = inst.graph;
    if (!g.has_vertex(v) || g.degree(v) != 4)
        throw std::logic_error("degree-4 rewire: vertex does not have degree 4");
    VertexSet nbhd = g.neighbors(v);
    if (induced_edge_count(g, nbhd) < 3)
        throw std::logic_error("degree-4 rewire: fewer than three neighborhood edges");

    // The guards force the neighborhood to induce a path; verify rather than
    // assume (anything else means the rule order upstream is broken).
    std::vector<VertexId> ends, mids;
    for (VertexId w : nbhd) {
        std::size_t d = 0;
        for (VertexId x : g.neighbors(w))
            if (nbhd.count(x)) ++d;
        if (d == 1)
            ends.push_back(w);
        else if (d == 2)
            mids.push_back(w);
    }
    if (induced_edge_count(g, nbhd) != 3 || ends.size() != 2 || mids.size() != 2)
        throw std::logic_error("degree-4 rewire: neighborhood is not a path (rule-ordering bug)");

    VertexId a = std::min(ends[0], ends[1]);
    VertexId d = std::max(ends[0], ends[1]);
    VertexId b = g.has_edge(a, mids[0]) ? mids[0] : mids[1];
    VertexId c = b == mids[0] ? mids[1] : mids[0];
    VertexSet na = g.neighbors(a), nd = g.neighbors(d);

    TraceEvent e = delete_event(RuleTag::Degree4PathRewire, inst.graph, {v}, 0,
                                Degree4PathPayload{v, a, b, c, d});
    for (VertexId x : nbhd)
        for (VertexId y : nbhd)
            if (x < y) add_edges_to(inst.graph, e, x, {y});
    add_edges_to(inst.graph, e, a, nd);
    add_edges_to(inst.graph, e, b, nd);
    add_edges_to(inst.graph, e, c, na);
    add_edges_to(inst.graph, e, d, na);
    ReductionTrace trace;
    trace.append(std::move(e));
    return KernelOutcome::settle(std::move(inst), std::move(trace));
}

KernelOutcome rule_degree_four_path(Instance inst) {
    for (VertexId v : inst.graph.vertices())
        if (inst.graph.degree(v) == 4 &&
            induced_edge_count(inst.graph, inst.graph.neighbors(v)) >= 3)
            return apply_degree_four_path_at(std::move(inst), v);
    return KernelOutcome::settle(std::move(inst), {});
}

namespace {

// Internal edges of the neighborhood of a degree-4 vertex, as index pairs
// into the sorted neighbor list.
std::vector<std::pair<int, int>> neighborhood_edges(const Graph& g,
                                                    const std::vector<VertexId>& nb) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(nb.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(nb.size()); ++j)
            if (g.has_edge(nb[i], nb[j])) edges.emplace_back(i, j);
    return edges;
}

// Shared rewiring for the two degree-4 replacement rules: deletes the closed
// neighborhood of u (roles[0..3] are the neighbors in pattern order), creates
// one fresh vertex per replacement core vertex and attaches it to the union
// of its classes' external sets.
KernelOutcome swap_closed_neighborhood(Instance inst, RuleTag tag, VertexId u,
                                       const std::array<VertexId, 4>& roles,
                                       const AttachmentPattern& source,
                                       const AttachmentPattern& replacement) {
    std::vector<VertexSet> ext(4);
    VertexSet closed = inst.graph.closed_neighborhood(u);
    for (int i = 0; i < 4; ++i)
        for (VertexId w : inst.graph.neighbors(roles[i]))
            if (!closed.count(w)) ext[i].insert(w);

    VertexSet doomed(roles.begin(), roles.end());
    doomed.insert(u);
    PatternSwapPayload payload;
    payload.removed_core = {roles[0], roles[1], roles[2], roles[3], u};
    payload.removed_pattern = source;
    payload.interface_sets = ext;
    payload.inserted_pattern = replacement;
    payload.shift = 0;

    TraceEvent e;
    e.rule = tag;
    e.budget_delta = 0;
    for (VertexId v : doomed) {
        const VertexSet& nbrs = inst.graph.neighbors(v);
        e.deleted.emplace_back(v, std::vector<VertexId>(nbrs.begin(), nbrs.end()));
    }
    for (VertexId v : doomed) inst.graph.remove_vertex(v);

    std::vector<VertexId> fresh;
    for (int i = 0; i < replacement.core.n; ++i) {
        VertexId f = inst.graph.add_vertex();
        std::vector<VertexId> nbrs;
        for (int j = 0; j < i; ++j)
            if (replacement.core.has_edge(i, j)) nbrs.push_back(fresh[j]);
        VertexSet extern_nbrs;
        for (int cls = 0; cls < 4; ++cls)
            if ((replacement.attach[i] >> cls) & 1u)
                extern_nbrs.insert(ext[cls].begin(), ext[cls].end());
        nbrs.insert(nbrs.end(), extern_nbrs.begin(), extern_nbrs.end());
        for (VertexId w : nbrs) inst.graph.add_edge(f, w);
        e.created.emplace_back(f, nbrs);
        fresh.push_back(f);
    }
    payload.inserted_core = fresh;
    e.payload = std::move(payload);
    ReductionTrace trace;
    trace.append(std::move(e));
    return KernelOutcome::settle(std::move(inst), std::move(trace));
}

}  // namespace

KernelOutcome apply_degree_four_two_edges_disjoint_at(Instance inst, VertexId u) {
    const Graph& g = inst.graph;
    if (!g.has_vertex(u) || g.degree(u) != 4)
        return KernelOutcome::settle(std::move(inst), {});
    std::vector<VertexId> nb(g.neighbors(u).begin(), g.neighbors(u).end());
    auto edges = neighborhood_edges(g, nb);
    if (edges.size() != 2) return KernelOutcome::settle(std::move(inst), {});
    auto [i0, i1] = edges[0];
    auto [i2, i3] = edges[1];
    if (i0 == i2 || i0 == i3 || i1 == i2 || i1 == i3)
        return KernelOutcome::settle(std::move(inst), {});
    std::array<VertexId, 4> roles{nb[i0], nb[i1], nb[i2], nb[i3]};
    return swap_closed_neighborhood(std::move(inst), RuleTag::Degree4DisjointSwap, u, roles,
                                    deg4_two_disjoint_edges_pattern(),
                                    deg4_disjoint_replacement_pattern());
}

KernelOutcome rule_degree_four_two_edges_disjoint(Instance inst) {
    for (VertexId u : inst.graph.vertices()) {
        KernelOutcome out = apply_degree_four_two_edges_disjoint_at(std::move(inst), u);
        if (out.decided() || !out.trace.empty()) return out;
        inst = std::move(*out.instance);
    }
    return KernelOutcome::settle(std::move(inst), {});
}

KernelOutcome apply_degree_four_two_edges_path_at(Instance inst, VertexId u) {
    const Graph& g = inst.graph;
    if (!g.has_vertex(u) || g.degree(u) != 4)
        return KernelOutcome::settle(std::move(inst), {});
    std::vector<VertexId> nb(g.neighbors(u).begin(), g.neighbors(u).end());
    auto edges = neighborhood_edges(g, nb);
    if (edges.size() != 2) return KernelOutcome::settle(std::move(inst), {});
    auto [i0, i1] = edges[0];
    auto [i2, i3] = edges[1];
    int mid, e0, e1;
    if (i0 == i2) mid = i0, e0 = i1, e1 = i3;
    else if (i0 == i3) mid = i0, e0 = i1, e1 = i2;
    else if (i1 == i2) mid = i1, e0 = i0, e1 = i3;
    else if (i1 == i3) mid = i1, e0 = i0, e1 = i2;
    else return KernelOutcome::settle(std::move(inst), {});
    int other = 0 + 1 + 2 + 3 - mid - e0 - e1;
    std::array<VertexId, 4> roles{nb[std::min(e0, e1)], nb[mid], nb[std::max(e0, e1)],
                                  nb[other]};
    return swap_closed_neighborhood(std::move(inst), RuleTag::Degree4PathSwap, u, roles,
                                    deg4_path_two_edges_pattern(),
                                    deg4_path_replacement_pattern());
}

KernelOutcome rule_degree_four_two_edges_path(Instance inst) {
    for (VertexId u : inst.graph.vertices()) {
        KernelOutcome out = apply_degree_four_two_edges_path_at(std::move(inst), u);
        if (out.decided() || !out.trace.empty()) return out;
        inst = std::move(*out.instance);
    }
    return KernelOutcome::settle(std::move(inst), {});
}

KernelOutcome kernelize_min_degree(Instance inst, MinDegreeOptions opts) {
    if (inst.budget == 0 && !inst.graph.edgeless()) return KernelOutcome::no();
    ReductionTrace trace;
    for (;;) {
        bool progressed = false;
        auto step = [&](KernelOutcome out) -> std::optional<KernelOutcome> {
            if (!out.trace.empty()) progressed = true;
            trace.append(std::move(out.trace));
            if (out.decided()) {
                out.trace = std::move(trace);
                return out;
            }
            inst = std::move(*out.instance);
            return std::nullopt;
        };

        if (auto done = step(rule_isolated(std::move(inst)))) return *done;
        if (auto done = step(rule_high_degree(std::move(inst)))) return *done;
        if (progressed) continue;
        if (auto done = step(rule_pendant(std::move(inst)))) return *done;
        if (progressed) continue;
        if (auto done = step(rule_dominance(std::move(inst)))) return *done;
        if (progressed) continue;
        if (auto done = step(rule_clique_comatching(std::move(inst), 4))) return *done;
        if (progressed) continue;
        if (auto done = step(rule_degree_two(std::move(inst)))) return *done;
        if (progressed) continue;
        // Degree-3 neighborhoods are independent here: dominance and
        // clique/co-matching are exhausted.
        if (auto done = step(rule_degree_three(std::move(inst)))) return *done;
        if (progressed) continue;
        if (auto done = step(rule_degree_four_path(std::move(inst)))) return *done;
        if (progressed) continue;
        if (opts.enable_discovered_rules) {
            if (auto done = step(rule_degree_four_two_edges_disjoint(std::move(inst))))
                return *done;
            if (progressed) continue;
            if (auto done = step(rule_degree_four_two_edges_path(std::move(inst)))) return *done;
            if (progressed) continue;
        }
        break;
    }
    return KernelOutcome::settle(std::move(inst), std::move(trace));
}

namespace {

struct LiftVisitor {
    VertexSet& cover;

    void require(bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("lift_solution: ") + what);
    }

    void operator()(const IsolatedPayload&) {}
    void operator()(const HighDegreePayload& p) { cover.insert(p.v); }
    void operator()(const CrownPayload& p) { cover.insert(p.head.begin(), p.head.end()); }
    void operator()(const LpPayload& p) { cover.insert(p.ones.begin(), p.ones.end()); }
    void operator()(const PendantPayload& p) { cover.insert(p.support); }
    void operator()(const DominancePayload& p) { cover.insert(p.removed); }

    void operator()(const Degree2Payload& p) {
        if (cover.count(p.z)) {
            cover.erase(p.z);
            cover.insert(p.a);
            cover.insert(p.b);
        } else {
            cover.insert(p.v);
        }
    }

    void operator()(const CliqueComatchingPayload& p) {
        VertexSet missing;
        for (VertexId x : p.c1)
            if (!cover.count(x)) missing.insert(x);
        if (missing.empty()) {
            cover.insert(p.c2.begin(), p.c2.end());
            return;
        }
        require(missing.size() == 1, "cover misses two clique vertices");
        VertexId c1m = *missing.begin();
        VertexId c2m{};
        bool found = false;
        for (const auto& [x, y] : p.non_edges)
            if (x == c1m) {
                c2m = y;
                found = true;
            }
        require(found, "no co-matching partner recorded");
        cover.insert(p.v);
        for (VertexId y : p.c2)
            if (y != c2m) cover.insert(y);
    }

    void operator()(const Degree3Payload& p) {
        bool ha = cover.count(p.a), hb = cover.count(p.b), hc = cover.count(p.c);
        int have = int(ha) + int(hb) + int(hc);
        if (have == 3) return;
        if (have == 2) {
            // Swap the role vertex whose outside edges are already covered.
            if (!hc) cover.erase(p.a);
            else if (!ha) cover.erase(p.b);
            else cover.erase(p.c);
            cover.insert(p.v);
            return;
        }
        require(have == 1 && hb, "kernel cover misses the rewired triangle");
        cover.erase(p.b);
        cover.insert(p.v);
    }

    void operator()(const Degree4PathPayload& p) {
        bool ha = cover.count(p.a), hb = cover.count(p.b), hc = cover.count(p.c),
             hd = cover.count(p.d);
        int have = int(ha) + int(hb) + int(hc) + int(hd);
        if (have == 4) return;
        require(have == 3, "kernel cover misses two clique vertices");
        if (!hd || !hc) cover.erase(p.a);
        else cover.erase(p.d);
        cover.insert(p.v);
    }

    void operator()(const PatternSwapPayload& p) {
        int inner = 0;
        for (VertexId f : p.inserted_core) inner += static_cast<int>(cover.erase(f));

        int t = p.removed_pattern.t;
        std::uint32_t covered_classes = 0;
        for (int i = 0; i < t; ++i) {
            bool all = true;
            for (VertexId w : p.interface_sets[i])
                if (!cover.count(w)) {
                    all = false;
                    break;
                }
            if (all) covered_classes |= 1u << i;
        }
        const SmallGraph& core = p.removed_pattern.core;
        std::uint16_t forced = 0;
        for (int w = 0; w < core.n; ++w)
            if (p.removed_pattern.attach[w] & ~covered_classes) forced |= std::uint16_t(1u << w);

        std::uint16_t best = 0xffff;
        int best_size = core.n + 1;
        for (std::uint16_t mask = 0; mask < (1u << core.n); ++mask) {
            if ((mask & forced) != forced) continue;
            if (!covers(core, mask)) continue;
            int size = __builtin_popcount(mask);
            if (size < best_size) {
                best_size = size;
                best = mask;
            }
        }
        require(best_size <= core.n, "removed pattern has no feasible cover");
        // Top up so the lifted cover grows by exactly the budget shift.
        int want = inner + p.shift;
        for (int w = 0; w < core.n && best_size < want; ++w)
            if (!((best >> w) & 1u)) {
                best |= std::uint16_t(1u << w);
                ++best_size;
            }
        for (int w = 0; w < core.n; ++w)
            if ((best >> w) & 1u) cover.insert(p.removed_core[w]);
    }
};

}  // namespace

VertexSet lift_solution(const Graph& original, const ReductionTrace& trace,
                        const VertexSet& kernel_cover) {
    Graph kernel = replay(original, trace);
    for (VertexId v : kernel_cover)
        if (!kernel.has_vertex(v))
            throw std::invalid_argument("lift_solution: cover names a non-kernel vertex");
    if (!is_vertex_cover(kernel, kernel_cover))
        throw std::invalid_argument("lift_solution: input is not a cover of the kernel graph");

    VertexSet cover = kernel_cover;
    LiftVisitor visitor{cover};
    for (auto it = trace.events.rbegin(); it != trace.events.rend(); ++it)
        std::visit(visitor, it->payload);

    if (!is_vertex_cover(original, cover))
        throw std::logic_error("lift_solution: lifted set fails to cover the original graph");
    if (cover.size() != kernel_cover.size() + static_cast<std::size_t>(trace.total_budget_delta()))
        throw std::logic_error("lift_solution: lifted size does not match the budget delta");
    return cover;
}

}  // namespace vck
