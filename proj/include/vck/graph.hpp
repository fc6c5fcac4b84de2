#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <vector>

namespace vck {

// Stable vertex identity. Ids are allocated monotonically by a Graph and are
// never reused within one Graph lifetime, so a deleted vertex can still be
// named unambiguously (reduction traces rely on this).
struct VertexId {
    std::uint32_t value = 0;

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::ostream& operator<<(std::ostream& os, VertexId v);

using VertexSet = std::set<VertexId>;
using Edge = std::pair<VertexId, VertexId>;  // normalized: first < second

// Undirected simple graph. Adjacency is kept symmetric and loop-free; all
// iteration orders follow VertexId order, so identical construction histories
// produce identical graphs and identical reduction runs.
class Graph {
  public:
    Graph() = default;

    VertexId add_vertex();
    void add_vertex(VertexId v);  // v must not collide with a live or past id
    void remove_vertex(VertexId v);

    // Idempotent; u and v must be distinct live vertices.
    void add_edge(VertexId u, VertexId v);
    void remove_edge(VertexId u, VertexId v);

    bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
    bool has_edge(VertexId u, VertexId v) const;

    const VertexSet& neighbors(VertexId v) const;
    VertexSet closed_neighborhood(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    bool is_isolated(VertexId v) const { return degree(v) == 0; }

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool edgeless() const { return edge_count_ == 0; }

    VertexSet vertices() const;
    std::vector<Edge> edges() const;  // normalized, sorted

    // Adds a fresh vertex z with N(z) = N(s) \ s and deletes all of s.
    // Returns z. Never introduces a self-loop, even when s spans edges.
    VertexId contract(const VertexSet& s);

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

  private:
    std::map<VertexId, VertexSet> adj_;
    std::size_t edge_count_ = 0;
    std::uint32_t next_id_ = 0;
};

struct Instance {
    Graph graph;
    int budget = 0;  // k >= 0 always; rules report No instead of going negative
};

// Number of edges with both endpoints in s. s must be a subset of V(g).
std::size_t induced_edge_count(const Graph& g, const VertexSet& s);

// Neighborhood of a set: N(s) \ s.
VertexSet set_neighborhood(const Graph& g, const VertexSet& s);

bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& s);

}  // namespace vck
