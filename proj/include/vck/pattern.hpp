#pragma once

#include <array>
#include <cstdint>

#include "vck/smallgraph.hpp"

namespace vck {

// A core graph whose vertices each connect to a subset of t external
// neighborhood classes. Subsumes a boundaried graph (boundary vertex i is a
// core vertex with attachment {i}) and also expresses replacements whose
// vertices reattach across classes.
struct AttachmentPattern {
    SmallGraph core;
    int t = 0;
    std::array<std::uint8_t, 16> attach{};  // per core vertex, bitmask over [t]

    bool operator==(const AttachmentPattern&) const = default;
};

// Packs attachment bitmasks in core-vertex order, 8 bits each (t <= 8).
std::uint64_t attach_bits(const AttachmentPattern& p);

// Lexicographically smallest (edge_bits, attach_bits) over core-vertex
// permutations; interface labels stay fixed.
std::pair<std::uint64_t, std::uint64_t> pattern_canonical_key(const AttachmentPattern& p);

bool patterns_isomorphic(const AttachmentPattern& a, const AttachmentPattern& b);

// The four fixed degree-four patterns. Sources: a degree-4 vertex u (core
// index 4) whose neighborhood vertices 0..3 carry attachment {i} and induce
// exactly two edges. Replacements: 4-vertex cores with reattached classes,
// 0-equivalent to their sources.
AttachmentPattern deg4_two_disjoint_edges_pattern();   // nbhd edges 0-1, 2-3
AttachmentPattern deg4_disjoint_replacement_pattern(); // K4; att 0:{0,2} 1:{0,3} 2:{1,2} 3:{1,3}
AttachmentPattern deg4_path_two_edges_pattern();       // nbhd edges 0-1, 1-2
AttachmentPattern deg4_path_replacement_pattern();     // triangle 1-2-3; att 0:{0,2} 1:{1,3} 2:{2,3} 3:{0,3}

}  // namespace vck
