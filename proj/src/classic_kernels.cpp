#include "vck/classic_kernels.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace vck {

namespace {

// Records neighborhoods at deletion time, then deletes.
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

}  // namespace

void validate_crown(const Graph& g, const CrownDecomposition& cd) {
    VertexSet all = g.vertices();
    std::size_t total = cd.crown.size() + cd.head.size() + cd.body.size();
    VertexSet merged = cd.crown;
    merged.insert(cd.head.begin(), cd.head.end());
    merged.insert(cd.body.begin(), cd.body.end());
    if (total != all.size() || merged != all)
        throw std::invalid_argument("crown: (C,H,B) is not a partition of V(G)");
    if (cd.crown.empty()) throw std::invalid_argument("crown: C is empty");
    if (!is_independent_set(g, cd.crown))
        throw std::invalid_argument("crown: C is not independent");
    for (VertexId c : cd.crown)
        for (VertexId w : g.neighbors(c))
            if (cd.body.count(w)) throw std::invalid_argument("crown: edge between C and B");
    if (!cd.witness_matching.valid_for(g))
        throw std::invalid_argument("crown: witness matching uses non-edges");
    for (const auto& [u, v] : cd.witness_matching.pairs()) {
        bool uc = cd.crown.count(u) != 0, vc = cd.crown.count(v) != 0;
        bool uh = cd.head.count(u) != 0, vh = cd.head.count(v) != 0;
        if (!((uc && vh) || (uh && vc)))
            throw std::invalid_argument("crown: witness matching not inside G[C,H]");
    }
    if (!cd.witness_matching.saturates(cd.head))
        throw std::invalid_argument("crown: witness matching does not saturate H");
}

bool is_valid_crown(const Graph& g, const CrownDecomposition& cd) {
    try {
        validate_crown(g, cd);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

VertexSet HalfIntegralSolution::zeros() const {
    VertexSet s;
    for (const auto& [v, x2] : twice_value)
        if (x2 == 0) s.insert(v);
    return s;
}

VertexSet HalfIntegralSolution::halves() const {
    VertexSet s;
    for (const auto& [v, x2] : twice_value)
        if (x2 == 1) s.insert(v);
    return s;
}

VertexSet HalfIntegralSolution::ones() const {
    VertexSet s;
    for (const auto& [v, x2] : twice_value)
        if (x2 == 2) s.insert(v);
    return s;
}

bool HalfIntegralSolution::feasible_for(const Graph& g) const {
    for (const auto& [u, v] : g.edges())
        if (twice_value.at(u) + twice_value.at(v) < 2) return false;
    return true;
}

KernelOutcome rule_isolated(Instance inst) {
    ReductionTrace trace;
    for (VertexId v : inst.graph.vertices()) {
        if (inst.graph.is_isolated(v))
            trace.append(delete_event(RuleTag::Isolated, inst.graph, {v}, 0, IsolatedPayload{v}));
    }
    return KernelOutcome::settle(std::move(inst), std::move(trace));
}

KernelOutcome rule_high_degree(Instance inst) {
    ReductionTrace trace;
    for (;;) {
        VertexId pick{};
        bool found = false;
        for (VertexId v : inst.graph.vertices()) {
            if (inst.graph.degree(v) > static_cast<std::size_t>(inst.budget)) {
                pick = v;
                found = true;
                break;
            }
        }
        if (!found) break;
        if (inst.budget == 0) return KernelOutcome::no(std::move(trace));
        trace.append(
            delete_event(RuleTag::HighDegree, inst.graph, {pick}, 1, HighDegreePayload{pick}));
        --inst.budget;
    }
    return KernelOutcome::settle(std::move(inst), std::move(trace));
}

KernelOutcome buss_size_check(Instance inst) {
    for (VertexId v : inst.graph.vertices()) {
        if (inst.graph.is_isolated(v))
            throw std::logic_error("buss_size_check: isolated vertex present");
        if (inst.graph.degree(v) > static_cast<std::size_t>(inst.budget))
            throw std::logic_error("buss_size_check: vertex with degree above budget present");
    }
    auto k = static_cast<std::size_t>(inst.budget);
    if (inst.graph.edge_count() > k * k) return KernelOutcome::no();
    if (inst.graph.vertex_count() > k * k + k) return KernelOutcome::no();
    return KernelOutcome::settle(std::move(inst), {});
}

KernelOutcome buss_kernelize(Instance inst) {
    ReductionTrace trace;
    for (;;) {
        KernelOutcome iso = rule_isolated(std::move(inst));
        trace.append(std::move(iso.trace));
        if (iso.decided()) {
            iso.trace = std::move(trace);
            return iso;
        }
        KernelOutcome hd = rule_high_degree(std::move(*iso.instance));
        bool progressed = !hd.trace.empty();
        trace.append(std::move(hd.trace));
        if (hd.is_no()) return KernelOutcome::no(std::move(trace));
        if (hd.is_yes()) {
            hd.trace = std::move(trace);
            return hd;
        }
        inst = std::move(*hd.instance);
        if (!progressed) break;  // neither rule applies anymore
    }
    KernelOutcome out = buss_size_check(std::move(inst));
    out.trace = std::move(trace);
    return out;
}

std::variant<CrownDecomposition, Matching> find_crown_or_matching(const Graph& g, int k) {
    if (g.vertex_count() < 3 * static_cast<std::size_t>(k) + 1)
        throw std::invalid_argument("find_crown_or_matching: needs |V| >= 3k+1");
    for (VertexId v : g.vertices())
        if (g.is_isolated(v))
            throw std::invalid_argument("find_crown_or_matching: isolated vertex present");

    Matching m1 = greedy_maximal_matching(g);
    if (m1.size() >= static_cast<std::size_t>(k) + 1) return m1;

    VertexSet matched;
    for (const auto& [u, v] : m1.pairs()) {
        matched.insert(u);
        matched.insert(v);
    }
    VertexSet rest;  // independent by maximality of m1
    for (VertexId v : g.vertices())
        if (!matched.count(v)) rest.insert(v);

    // Bipartite subgraph between V(M1) and the rest, on the same vertex ids.
    Graph cross;
    for (VertexId v : g.vertices()) cross.add_vertex(v);
    for (const auto& [u, v] : g.edges()) {
        bool um = matched.count(u) != 0, vm = matched.count(v) != 0;
        if (um != vm) cross.add_edge(u, v);
    }
    Bipartition parts{rest, matched};
    Matching m2 = maximum_bipartite_matching(cross, parts);
    if (m2.size() >= static_cast<std::size_t>(k) + 1) return m2;

    // Alternating reachability from the unmatched rest vertices.
    VertexSet reached;
    std::deque<VertexId> queue;
    for (VertexId v : rest)
        if (!m2.saturates(v)) {
            reached.insert(v);
            queue.push_back(v);
        }
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : cross.neighbors(u)) {
            if (!reached.insert(w).second) continue;
            if (auto p = m2.partner(w); p && reached.insert(*p).second) queue.push_back(*p);
        }
    }

    CrownDecomposition cd;
    for (VertexId v : g.vertices()) {
        if (reached.count(v)) {
            if (rest.count(v))
                cd.crown.insert(v);
            else
                cd.head.insert(v);
        } else {
            cd.body.insert(v);
        }
    }
    for (const auto& [u, v] : m2.pairs()) {
        if (cd.head.count(u) || cd.head.count(v)) cd.witness_matching.add(u, v);
    }
    if (!is_valid_crown(g, cd))
        throw std::logic_error("find_crown_or_matching: constructed crown violates its invariants");
    return cd;
}

KernelOutcome rule_crown(Instance inst, const CrownDecomposition& cd) {
    validate_crown(inst.graph, cd);
    if (static_cast<int>(cd.head.size()) > inst.budget) return KernelOutcome::no();
    VertexSet doomed = cd.crown;
    doomed.insert(cd.head.begin(), cd.head.end());
    ReductionTrace trace;
    trace.append(delete_event(RuleTag::Crown, inst.graph, doomed,
                              static_cast<int>(cd.head.size()),
                              CrownPayload{cd.crown, cd.head}));
    inst.budget -= static_cast<int>(cd.head.size());
    return KernelOutcome::settle(std::move(inst), std::move(trace));
}

KernelOutcome crown_kernelize(Instance inst) {
    ReductionTrace trace;
    if (inst.budget == 0)
        return inst.graph.edgeless() ? KernelOutcome::settle(std::move(inst), {})
                                     : KernelOutcome::no();
    for (;;) {
        KernelOutcome iso = rule_isolated(std::move(inst));
        trace.append(std::move(iso.trace));
        if (iso.decided()) {
            iso.trace = std::move(trace);
            return iso;
        }
        inst = std::move(*iso.instance);
        if (inst.graph.vertex_count() <= 3 * static_cast<std::size_t>(inst.budget)) break;

        auto found = find_crown_or_matching(inst.graph, inst.budget);
        if (std::holds_alternative<Matching>(found)) return KernelOutcome::no(std::move(trace));

        KernelOutcome out = rule_crown(std::move(inst), std::get<CrownDecomposition>(found));
        trace.append(std::move(out.trace));
        if (out.is_no()) return KernelOutcome::no(std::move(trace));
        if (out.is_yes()) {
            out.trace = std::move(trace);
            return out;
        }
        inst = std::move(*out.instance);
        if (inst.budget == 0 && !inst.graph.edgeless()) return KernelOutcome::no(std::move(trace));
    }
    return KernelOutcome::settle(std::move(inst), std::move(trace));
}

HalfIntegralSolution solve_lp_half_integral(const Graph& g) {
    VertexSet vs = g.vertices();
    std::vector<VertexId> order(vs.begin(), vs.end());
    std::map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
    std::size_t n = order.size();

    Graph cover_graph;
    Bipartition parts;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        VertexId v = cover_graph.add_vertex();
        (i < n ? parts.left : parts.right).insert(v);
    }
    auto left = [&](std::size_t i) { return VertexId{static_cast<std::uint32_t>(i)}; };
    auto right = [&](std::size_t i) { return VertexId{static_cast<std::uint32_t>(n + i)}; };
    for (const auto& [u, v] : g.edges()) {
        cover_graph.add_edge(left(index.at(u)), right(index.at(v)));
        cover_graph.add_edge(left(index.at(v)), right(index.at(u)));
    }

    Matching mm = maximum_bipartite_matching(cover_graph, parts);
    VertexSet cover = konig_cover(cover_graph, parts, mm);

    HalfIntegralSolution sol;
    for (std::size_t i = 0; i < n; ++i) {
        int x2 = static_cast<int>(cover.count(left(i))) + static_cast<int>(cover.count(right(i)));
        sol.twice_value[order[i]] = x2;
        sol.twice_objective += x2;
    }
    if (sol.twice_objective != static_cast<int>(mm.size()) || !sol.feasible_for(g))
        throw std::logic_error("solve_lp_half_integral: optimality certificate failed");
    return sol;
}

KernelOutcome rule_lp(Instance inst) {
    HalfIntegralSolution sol = solve_lp_half_integral(inst.graph);
    if (sol.twice_objective > 2 * inst.budget) return KernelOutcome::no();

    VertexSet zeros = sol.zeros();
    VertexSet ones = sol.ones();
    if (zeros.empty() && ones.empty())
        return KernelOutcome::settle(std::move(inst), {});

    VertexSet doomed = zeros;
    doomed.insert(ones.begin(), ones.end());
    ReductionTrace trace;
    trace.append(delete_event(RuleTag::Lp, inst.graph, doomed, static_cast<int>(ones.size()),
                              LpPayload{zeros, ones}));
    inst.budget -= static_cast<int>(ones.size());
    if (inst.graph.vertex_count() > 2 * static_cast<std::size_t>(inst.budget))
        throw std::logic_error("rule_lp: half-integral remainder exceeds twice the budget");
    return KernelOutcome::settle(std::move(inst), std::move(trace));
}

}  // namespace vck
