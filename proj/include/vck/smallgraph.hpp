#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "vck/graph.hpp"

namespace vck {

// Dense adjacency-bitmask graph on at most 16 vertices, used where subset
// enumeration over the vertex set is the whole point (profiles, pattern
// enumeration, exhaustive test corpora).
struct SmallGraph {
    int n = 0;
    std::array<std::uint16_t, 16> adj{};

    void add_edge(int u, int v) {
        adj[u] |= std::uint16_t(1u << v);
        adj[v] |= std::uint16_t(1u << u);
    }
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    int degree(int v) const { return __builtin_popcount(adj[v]); }
    int edge_count() const;

    // Upper-triangle edge bits in row-major order: pair (i,j), i<j, gets bit
    // position i*n - i*(i+1)/2 + (j-i-1). Stable encoding for hashing and
    // canonical-form comparison; needs n <= 11 to fit 64 bits comfortably.
    std::uint64_t edge_bits() const;

    bool operator==(const SmallGraph&) const = default;
};

SmallGraph small_graph_from_edge_bits(int n, std::uint64_t bits);

// True iff the mask covers every edge: for all v not in mask, adj[v] subset of mask.
bool covers(const SmallGraph& g, std::uint16_t mask);

bool is_connected(const SmallGraph& g);

// Smallest edge_bits value over all vertex permutations. Backtracking with
// degree-class pre-partitioning and prefix pruning; fine up to n = 8.
std::uint64_t canonical_code(const SmallGraph& g);

// All unlabeled graphs on exactly n vertices (n <= 8), one canonical
// representative each, built by single-vertex augmentation. Deterministic
// ascending order of canonical code.
std::vector<SmallGraph> all_unlabeled_graphs(int n);

// Conversions. to_small maps vertices to indices 0..n-1 in VertexId order and
// also reports the index->VertexId table when requested.
SmallGraph to_small(const Graph& g);
SmallGraph to_small(const Graph& g, std::vector<VertexId>& index_to_id);
Graph to_graph(const SmallGraph& g);

}  // namespace vck
