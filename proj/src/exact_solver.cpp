#include "vck/exact_solver.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vck/degree_kernels.hpp"
#include "vck/matching.hpp"

namespace vck {

SolveResult brute_force_vc(const Graph& g, int max_vertices) {
    auto n = static_cast<int>(g.vertex_count());
    if (n > max_vertices)
        throw std::invalid_argument("brute_force_vc: graph exceeds the vertex cap");
    VertexSet vs = g.vertices();
    std::vector<VertexId> order(vs.begin(), vs.end());
    std::vector<std::uint32_t> adj(n, 0);
    {
        std::map<VertexId, int> index;
        for (int i = 0; i < n; ++i) index[order[i]] = i;
        for (const auto& [u, v] : g.edges()) {
            adj[index.at(u)] |= 1u << index.at(v);
            adj[index.at(v)] |= 1u << index.at(u);
        }
    }
    SolveResult res;
    int best = n;
    std::uint32_t best_mask = n == 32 ? ~0u : (1u << n) - 1;
    std::uint64_t limit = std::uint64_t(1) << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        ++res.nodes;
        auto m = static_cast<std::uint32_t>(mask);
        if (__builtin_popcount(m) >= best) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (!((m >> v) & 1u) && (adj[v] & ~m)) ok = false;
        if (ok) {
            best = __builtin_popcount(m);
            best_mask = m;
        }
    }
    res.optimum = best;
    for (int v = 0; v < n; ++v)
        if ((best_mask >> v) & 1u) res.witness.insert(order[v]);
    return res;
}

namespace {

std::optional<VertexSet> branch(const Instance& inst, bool use_kernelization,
                                std::uint64_t& nodes) {
    ++nodes;
    Instance cur = inst;
    ReductionTrace trace;
    if (use_kernelization) {
        KernelOutcome out = kernelize_min_degree(std::move(cur), {true});
        if (out.is_no()) return std::nullopt;
        trace = std::move(out.trace);
        if (out.is_yes())
            return lift_solution(inst.graph, trace, {});
        cur = std::move(*out.instance);
    }
    if (cur.graph.edgeless()) {
        VertexSet empty;
        return use_kernelization ? lift_solution(inst.graph, trace, empty) : empty;
    }
    if (cur.budget <= 0) return std::nullopt;

    VertexId pick{};
    std::size_t best_degree = 0;
    for (VertexId v : cur.graph.vertices()) {
        if (cur.graph.degree(v) > best_degree) {
            best_degree = cur.graph.degree(v);
            pick = v;
        }
    }

    std::optional<VertexSet> found;
    {
        Instance take = cur;
        take.graph.remove_vertex(pick);
        --take.budget;
        if (auto sub = branch(take, use_kernelization, nodes)) {
            sub->insert(pick);
            found = std::move(sub);
        }
    }
    if (!found && static_cast<int>(best_degree) <= cur.budget) {
        Instance take = cur;
        VertexSet nbhd = take.graph.neighbors(pick);
        take.graph.remove_vertex(pick);
        for (VertexId w : nbhd) take.graph.remove_vertex(w);
        take.budget -= static_cast<int>(nbhd.size());
        if (auto sub = branch(take, use_kernelization, nodes)) {
            sub->insert(nbhd.begin(), nbhd.end());
            found = std::move(sub);
        }
    }
    if (!found) return std::nullopt;
    return use_kernelization ? lift_solution(inst.graph, trace, *found) : *found;
}

}  // namespace

DecideResult branch_solve(const Instance& inst, bool use_kernelization) {
    DecideResult res;
    auto cover = branch(inst, use_kernelization, res.nodes);
    res.yes = cover.has_value();
    if (cover) res.witness = std::move(*cover);
    return res;
}

SolveResult branch_optimize(const Graph& g, bool use_kernelization) {
    SolveResult res;
    int lower = static_cast<int>(greedy_maximal_matching(g).size());
    for (int k = lower;; ++k) {
        DecideResult d = branch_solve({g, k}, use_kernelization);
        res.nodes += d.nodes;
        if (d.yes) {
            res.optimum = static_cast<int>(d.witness.size());
            res.witness = std::move(d.witness);
            return res;
        }
    }
}

BranchingFactor branching_factor(int degree) {
    if (degree < 2) throw std::invalid_argument("branching_factor: degree must be at least 2");
    auto excess = [degree](double x) {
        return std::pow(x, degree) - std::pow(x, degree - 1) - 1.0;
    };
    double lo = 1.0, hi = 2.0;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        (excess(mid) < 0.0 ? lo : hi) = mid;
    }
    return {degree, 0.5 * (lo + hi)};
}

}  // namespace vck
