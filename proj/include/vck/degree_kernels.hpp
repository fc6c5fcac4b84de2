#pragma once

#include "vck/outcome.hpp"

namespace vck {

// Each rule_* scans vertices in VertexId order and applies at the first
// applicable position (one event per call); the apply_*_at variants apply at
// a caller-chosen position and throw std::logic_error when the position
// violates the rule's structural precondition. An inapplicable rule returns
// the instance unchanged with an empty trace.

// Pendant edge {u, v} with deg(u) = 1: delete both, budget - 1.
KernelOutcome rule_pendant(Instance inst);
KernelOutcome apply_pendant_at(Instance inst, VertexId leaf);

// Adjacent u, v with N(v) subset of N[u]: delete u, budget - 1.
KernelOutcome rule_dominance(Instance inst);
KernelOutcome apply_dominance_at(Instance inst, VertexId u, VertexId v);

// Degree-2 vertex with non-adjacent neighbors: contract its closed
// neighborhood to one vertex, budget - 1.
KernelOutcome rule_degree_two(Instance inst);
KernelOutcome apply_degree_two_at(Instance inst, VertexId v);

// Partition (C1, C2) of N(v), |C1| >= |C2|, both cliques, and the non-edges
// of G[C1, C2] hit every C1 vertex exactly once: delete v and C2, connect
// each c1 to the former neighbors of its non-edge partner, budget - |C2|.
// Only vertices of degree <= max_degree are considered (must be <= 4).
KernelOutcome rule_clique_comatching(Instance inst, int max_degree = 4);
KernelOutcome apply_clique_comatching_at(Instance inst, VertexId v, const VertexSet& c1,
                                         const VertexSet& c2);

// Degree-3 vertex with independent neighborhood {a, b, c}: delete v, add
// edges {a,b}, {b,c} and connect a to N(b), b to N(c), c to N(a). Budget
// unchanged.
KernelOutcome rule_degree_three(Instance inst);
KernelOutcome apply_degree_three_at(Instance inst, VertexId v);

// Degree-4 vertex whose neighborhood induces at least three edges; the
// guard forces the neighborhood to be a path a-b-c-d (verified, not
// assumed). Delete v, complete N(v) to a clique, connect {a,b} to N(d) and
// {c,d} to N(a). Budget unchanged.
KernelOutcome rule_degree_four_path(Instance inst);
KernelOutcome apply_degree_four_path_at(Instance inst, VertexId v);

// Degree-4 vertex whose neighborhood induces exactly the two disjoint edges
// n0-n1, n2-n3: replace the closed neighborhood by a fresh K4 whose vertices
// attach to the external sets ext(0) u ext(2), ext(0) u ext(3),
// ext(1) u ext(2), ext(1) u ext(3). Budget unchanged.
KernelOutcome rule_degree_four_two_edges_disjoint(Instance inst);
KernelOutcome apply_degree_four_two_edges_disjoint_at(Instance inst, VertexId u);

// Degree-4 vertex whose neighborhood induces exactly the path n0-n1-n2 (n3
// edge-isolated): replace by a fresh triangle-plus-vertex core attached to
// ext(0) u ext(2), ext(1) u ext(3), ext(2) u ext(3), ext(0) u ext(3).
// Budget unchanged.
KernelOutcome rule_degree_four_two_edges_path(Instance inst);
KernelOutcome apply_degree_four_two_edges_path_at(Instance inst, VertexId u);

struct MinDegreeOptions {
    bool enable_discovered_rules = false;  // also run the two degree-4 swaps
};

// Fixpoint over isolated, high-degree, pendant, dominance, clique/co-matching,
// degree-2, degree-3 and degree-4 rules (cheapest guards first). Output
// guarantees: minimum degree >= 4 and every degree-4 vertex has at most two
// induced neighborhood edges; at most one when the discovered rules run.
KernelOutcome kernelize_min_degree(Instance inst, MinDegreeOptions opts = {});

// Replays the trace backwards, turning a cover of the kernel graph into a
// cover of the original graph; grows by exactly the trace's budget delta.
// Throws std::invalid_argument when kernel_cover does not cover the kernel
// graph (checked against a forward replay of the trace).
VertexSet lift_solution(const Graph& original, const ReductionTrace& trace,
                        const VertexSet& kernel_cover);

}  // namespace vck
