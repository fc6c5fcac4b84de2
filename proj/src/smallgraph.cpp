#include "vck/smallgraph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>

namespace vck {

int SmallGraph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n; ++v) total += degree(v);
    return total / 2;
}

std::uint64_t SmallGraph::edge_bits() const {
    std::uint64_t bits = 0;
    int pos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++pos)
            if (has_edge(i, j)) bits |= std::uint64_t(1) << pos;
    return bits;
}

SmallGraph small_graph_from_edge_bits(int n, std::uint64_t bits) {
    SmallGraph g;
    g.n = n;
    int pos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++pos)
            if ((bits >> pos) & 1u) g.add_edge(i, j);
    return g;
}

bool covers(const SmallGraph& g, std::uint16_t mask) {
    for (int v = 0; v < g.n; ++v)
        if (!((mask >> v) & 1u) && (g.adj[v] & ~mask)) return false;
    return true;
}

bool is_connected(const SmallGraph& g) {
    if (g.n == 0) return true;
    std::uint16_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint16_t next = 0;
        for (int v = 0; v < g.n; ++v)
            if ((frontier >> v) & 1u) next |= g.adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == std::uint16_t((1u << g.n) - 1);
}

namespace {

// Column-major packing: the bits describing edges between position p and
// positions 0..p-1 occupy p consecutive bits starting at p*(p-1)/2.
std::uint64_t pack_columns(const std::array<std::uint16_t, 16>& col, int n) {
    std::uint64_t code = 0;
    int offset = 0;
    for (int p = 1; p < n; ++p) {
        code |= std::uint64_t(col[p]) << offset;
        offset += p;
    }
    return code;
}

SmallGraph unpack_columns(int n, std::uint64_t code) {
    SmallGraph g;
    g.n = n;
    int offset = 0;
    for (int p = 1; p < n; ++p) {
        auto bits = std::uint16_t((code >> offset) & ((1u << p) - 1));
        for (int q = 0; q < p; ++q)
            if ((bits >> q) & 1u) g.add_edge(q, p);
        offset += p;
    }
    return g;
}

struct Canonicalizer {
    const SmallGraph& g;
    std::array<int, 16> target_degree{};   // degree required at each position
    std::array<int, 16> assigned{};        // position -> original vertex
    std::uint16_t used = 0;                // original vertices already placed
    std::array<std::uint16_t, 16> best_col{};
    std::array<std::uint16_t, 16> cur_col{};
    bool have_best = false;

    explicit Canonicalizer(const SmallGraph& graph) : g(graph) {
        std::vector<int> degs(g.n);
        for (int v = 0; v < g.n; ++v) degs[v] = g.degree(v);
        std::sort(degs.begin(), degs.end(), std::greater<>());
        for (int p = 0; p < g.n; ++p) target_degree[p] = degs[p];
        best_col.fill(0xffff);
    }

    void search(int p, bool tied) {
        if (p == g.n) {
            best_col = cur_col;
            have_best = true;
            return;
        }
        for (int v = 0; v < g.n; ++v) {
            if ((used >> v) & 1u) continue;
            if (g.degree(v) != target_degree[p]) continue;
            std::uint16_t col = 0;
            for (int q = 0; q < p; ++q)
                if (g.has_edge(assigned[q], v)) col |= std::uint16_t(1u << q);
            bool next_tied = tied;
            if (tied && have_best) {
                if (col > best_col[p]) continue;
                if (col < best_col[p]) next_tied = false;
            }
            cur_col[p] = col;
            if (!next_tied) {
                // Strictly better prefix: tighten best so deeper levels prune
                // against it again.
                best_col[p] = col;
                for (int q = p + 1; q < g.n; ++q) best_col[q] = 0xffff;
            }
            assigned[p] = v;
            used |= std::uint16_t(1u << v);
            search(p + 1, true);
            used &= std::uint16_t(~(1u << v));
        }
    }
};

}  // namespace

std::uint64_t canonical_code(const SmallGraph& g) {
    if (g.n > 11) throw std::invalid_argument("canonical_code: graph too large");
    if (g.n <= 1) return 0;
    Canonicalizer c(g);
    c.search(0, true);
    return pack_columns(c.best_col, g.n);
}

std::vector<SmallGraph> all_unlabeled_graphs(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("all_unlabeled_graphs: n out of range [1..8]");
    static std::mutex mu;
    static std::array<std::optional<std::vector<SmallGraph>>, 9> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[1]) cache[1] = std::vector<SmallGraph>{SmallGraph{1, {}}};
    for (int k = 2; k <= n; ++k) {
        if (cache[k]) continue;
        std::set<std::uint64_t> codes;
        for (const SmallGraph& parent : *cache[k - 1]) {
            for (std::uint32_t nbhd = 0; nbhd < (1u << (k - 1)); ++nbhd) {
                SmallGraph h = parent;
                h.n = k;
                for (int q = 0; q < k - 1; ++q)
                    if ((nbhd >> q) & 1u) h.add_edge(q, k - 1);
                codes.insert(canonical_code(h));
            }
        }
        std::vector<SmallGraph> out;
        out.reserve(codes.size());
        for (std::uint64_t code : codes) out.push_back(unpack_columns(k, code));
        cache[k] = std::move(out);
    }
    return *cache[n];
}

SmallGraph to_small(const Graph& g) {
    std::vector<VertexId> ignore;
    return to_small(g, ignore);
}

SmallGraph to_small(const Graph& g, std::vector<VertexId>& index_to_id) {
    if (g.vertex_count() > 16) throw std::invalid_argument("to_small: graph too large");
    VertexSet vs = g.vertices();
    index_to_id.assign(vs.begin(), vs.end());
    std::map<VertexId, int> index;
    for (int i = 0; i < static_cast<int>(index_to_id.size()); ++i) index[index_to_id[i]] = i;
    SmallGraph s;
    s.n = static_cast<int>(index_to_id.size());
    for (const auto& [u, v] : g.edges()) s.add_edge(index.at(u), index.at(v));
    return s;
}

Graph to_graph(const SmallGraph& s) {
    Graph g;
    std::vector<VertexId> ids;
    ids.reserve(s.n);
    for (int i = 0; i < s.n; ++i) ids.push_back(g.add_vertex());
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j)
            if (s.has_edge(i, j)) g.add_edge(ids[i], ids[j]);
    return g;
}

}  // namespace vck
