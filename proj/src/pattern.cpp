#include "vck/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vck {

std::uint64_t attach_bits(const AttachmentPattern& p) {
    std::uint64_t bits = 0;
    for (int v = 0; v < p.core.n; ++v) bits |= std::uint64_t(p.attach[v]) << (8 * v);
    return bits;
}

std::pair<std::uint64_t, std::uint64_t> pattern_canonical_key(const AttachmentPattern& p) {
    if (p.core.n > 8) throw std::invalid_argument("pattern_canonical_key: core too large");
    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + p.core.n, 0);
    std::pair<std::uint64_t, std::uint64_t> best{~0ull, ~0ull};
    do {
        AttachmentPattern q;
        q.core.n = p.core.n;
        q.t = p.t;
        for (int v = 0; v < p.core.n; ++v) {
            q.attach[perm[v]] = p.attach[v];
            for (int w = v + 1; w < p.core.n; ++w)
                if (p.core.has_edge(v, w)) q.core.add_edge(perm[v], perm[w]);
        }
        best = std::min(best, {q.core.edge_bits(), attach_bits(q)});
    } while (std::next_permutation(perm.begin(), perm.begin() + p.core.n));
    return best;
}

bool patterns_isomorphic(const AttachmentPattern& a, const AttachmentPattern& b) {
    if (a.core.n != b.core.n || a.t != b.t) return false;
    return pattern_canonical_key(a) == pattern_canonical_key(b);
}

namespace {

AttachmentPattern deg4_source(int extra_u, int extra_v) {
    AttachmentPattern p;
    p.core.n = 5;
    p.t = 4;
    for (int i = 0; i < 4; ++i) {
        p.core.add_edge(4, i);
        p.attach[i] = std::uint8_t(1u << i);
    }
    p.core.add_edge(0, 1);
    p.core.add_edge(extra_u, extra_v);
    return p;
}

}  // namespace

AttachmentPattern deg4_two_disjoint_edges_pattern() { return deg4_source(2, 3); }

AttachmentPattern deg4_disjoint_replacement_pattern() {
    AttachmentPattern p;
    p.core.n = 4;
    p.t = 4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) p.core.add_edge(i, j);
    p.attach[0] = 0b0101;  // classes 0, 2
    p.attach[1] = 0b1001;  // classes 0, 3
    p.attach[2] = 0b0110;  // classes 1, 2
    p.attach[3] = 0b1010;  // classes 1, 3
    return p;
}

AttachmentPattern deg4_path_two_edges_pattern() { return deg4_source(1, 2); }

AttachmentPattern deg4_path_replacement_pattern() {
    AttachmentPattern p;
    p.core.n = 4;
    p.t = 4;
    p.core.add_edge(1, 2);
    p.core.add_edge(1, 3);
    p.core.add_edge(2, 3);
    p.attach[0] = 0b0101;  // classes 0, 2
    p.attach[1] = 0b1010;  // classes 1, 3
    p.attach[2] = 0b1100;  // classes 2, 3
    p.attach[3] = 0b1001;  // classes 0, 3
    return p;
}

}  // namespace vck
