#pragma once

#include <cstdint>
#include <optional>

#include "vck/graph.hpp"

namespace vck {

struct SolveResult {
    int optimum = 0;
    VertexSet witness;
    std::uint64_t nodes = 0;  // subsets scanned / branch nodes expanded
};

// Exact minimum vertex cover by subset enumeration with popcount pruning.
// Refuses graphs above max_vertices (default 20) so callers fall back to the
// branching solver.
SolveResult brute_force_vc(const Graph& g, int max_vertices = 20);

struct DecideResult {
    bool yes = false;
    VertexSet witness;  // cover of size <= budget when yes
    std::uint64_t nodes = 0;
};

// Decides (G, k) by branching on a maximum-degree vertex v: either v joins
// the cover (budget - 1) or all of N(v) does (budget - deg v). When
// use_kernelization is set, the min-degree kernelizer runs at every node and
// the witness is lifted back through its trace.
DecideResult branch_solve(const Instance& inst, bool use_kernelization);

// Exact optimum via branch_solve for growing budgets, starting from the
// greedy-matching lower bound.
SolveResult branch_optimize(const Graph& g, bool use_kernelization);

struct BranchingFactor {
    int degree = 0;
    double lambda = 0.0;  // unique root > 1 of lambda^d = lambda^(d-1) + 1
};

// Bisection to absolute tolerance 1e-9; d >= 2. Governs the O(lambda^k) run
// time of the two-way branch (1, d).
BranchingFactor branching_factor(int degree);

}  // namespace vck
