#pragma once

#include <map>
#include <optional>
#include <vector>

#include "vck/graph.hpp"

namespace vck {

struct Bipartition {
    VertexSet left;
    VertexSet right;
};

// A set of pairwise non-adjacent edges, stored as a symmetric partner map.
class Matching {
  public:
    void add(VertexId u, VertexId v);
    std::size_t size() const { return partner_.size() / 2; }
    bool saturates(VertexId v) const { return partner_.count(v) != 0; }
    bool saturates(const VertexSet& s) const;
    std::optional<VertexId> partner(VertexId v) const;
    std::vector<Edge> pairs() const;  // normalized, sorted

    // Every pair is an edge of g and no vertex is matched twice.
    bool valid_for(const Graph& g) const;

  private:
    std::map<VertexId, VertexId> partner_;
};

// Throws std::invalid_argument when parts do not partition V(g) or an edge
// lies inside one part.
void validate_bipartition(const Graph& g, const Bipartition& parts);

// Hopcroft-Karp layered augmentation. Deterministic: BFS/DFS scan vertices
// and neighborhoods in VertexId order.
Matching maximum_bipartite_matching(const Graph& g, const Bipartition& parts);

// True iff an augmenting path for m exists in (g, parts).
bool has_augmenting_path(const Graph& g, const Bipartition& parts, const Matching& m);

// Maximal matching by scanning vertices and neighbors in VertexId order.
Matching greedy_maximal_matching(const Graph& g);

// Minimum vertex cover of size |m| from a maximum matching, via alternating
// reachability from unmatched left vertices. Throws std::invalid_argument if
// m is not maximum (detected by the resulting cover failing Koenig equality).
VertexSet konig_cover(const Graph& g, const Bipartition& parts, const Matching& m);

}  // namespace vck
