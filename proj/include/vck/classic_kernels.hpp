#pragma once

#include <variant>

#include "vck/matching.hpp"
#include "vck/outcome.hpp"

namespace vck {

// Partition (C, H, B) of V(G): C a nonempty independent crown with no edges
// into the body B, and a matching in G[C, H] saturating the head H.
struct CrownDecomposition {
    VertexSet crown;
    VertexSet head;
    VertexSet body;
    Matching witness_matching;
};

// Throws std::invalid_argument naming the violated condition.
void validate_crown(const Graph& g, const CrownDecomposition& cd);
bool is_valid_crown(const Graph& g, const CrownDecomposition& cd);

// Optimal solution of the relaxed covering LP in half-integral form. Values
// are stored doubled so all arithmetic stays integral.
struct HalfIntegralSolution {
    std::map<VertexId, int> twice_value;  // 0, 1 or 2 per vertex
    int twice_objective = 0;

    VertexSet zeros() const;   // x_v < 1/2
    VertexSet halves() const;  // x_v = 1/2
    VertexSet ones() const;    // x_v > 1/2
    bool feasible_for(const Graph& g) const;  // every edge has x_u + x_v >= 1
};

// Deletes every isolated vertex; budget unchanged.
KernelOutcome rule_isolated(Instance inst);

// While some vertex has degree > budget: delete it and decrement the budget.
// No if that would drive the budget negative.
KernelOutcome rule_high_degree(Instance inst);

// Requires isolated and over-budget-degree vertices to be gone (throws
// std::logic_error otherwise). No when |E| > k^2 or |V| > k^2 + k; otherwise
// the instance passes through with those bounds guaranteed.
KernelOutcome buss_size_check(Instance inst);

// Exhausts the two rules above, then applies the size check.
KernelOutcome buss_kernelize(Instance inst);

// Either a matching of size k+1 (certifying No) or a crown decomposition.
// Preconditions: |V| >= 3k+1 and no isolated vertices; otherwise throws
// std::invalid_argument. Procedure: greedy maximal matching M1; if small,
// maximum matching M2 between V(M1) and the independent rest; if small,
// alternating reachability from the unmatched rest yields the crown.
std::variant<CrownDecomposition, Matching> find_crown_or_matching(const Graph& g, int k);

// Deletes C and H, budget -= |H|. No if |H| > budget. cd must be valid.
KernelOutcome rule_crown(Instance inst, const CrownDecomposition& cd);

// Loop: drop isolated vertices; stop once |V| <= 3k; otherwise find a crown
// (or conclude No) and reduce. Output has at most 3k vertices.
KernelOutcome crown_kernelize(Instance inst);

// Exact optimum of the relaxed LP via the bipartite double cover: vertices
// v_L, v_R per v, edges u_L-v_R and v_L-u_R per edge uv; a Koenig cover of
// that graph yields x_v = (copies of v in cover)/2 with objective equal to
// half the double cover's maximum matching size.
HalfIntegralSolution solve_lp_half_integral(const Graph& g);

// No when the LP objective exceeds the budget; otherwise deletes the zeros
// and ones, budget -= |ones|. Remaining vertex count is at most twice the
// remaining budget.
KernelOutcome rule_lp(Instance inst);

}  // namespace vck
