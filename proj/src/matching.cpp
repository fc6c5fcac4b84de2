#include "vck/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace vck {

void Matching::add(VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("matching: self-pair");
    if (partner_.count(u) || partner_.count(v))
        throw std::invalid_argument("matching: endpoint already matched");
    partner_[u] = v;
    partner_[v] = u;
}

bool Matching::saturates(const VertexSet& s) const {
    return std::all_of(s.begin(), s.end(), [&](VertexId v) { return saturates(v); });
}

std::optional<VertexId> Matching::partner(VertexId v) const {
    auto it = partner_.find(v);
    if (it == partner_.end()) return std::nullopt;
    return it->second;
}

std::vector<Edge> Matching::pairs() const {
    std::vector<Edge> out;
    for (const auto& [u, v] : partner_)
        if (u < v) out.emplace_back(u, v);
    return out;
}

bool Matching::valid_for(const Graph& g) const {
    for (const auto& [u, v] : pairs())
        if (!g.has_edge(u, v)) return false;
    return true;
}

void validate_bipartition(const Graph& g, const Bipartition& parts) {
    for (VertexId v : parts.left)
        if (parts.right.count(v))
            throw std::invalid_argument("bipartition: parts are not disjoint");
    for (VertexId v : g.vertices())
        if (!parts.left.count(v) && !parts.right.count(v))
            throw std::invalid_argument("bipartition: vertex not assigned to a part");
    for (const auto& [u, v] : g.edges()) {
        bool ul = parts.left.count(u) != 0;
        bool vl = parts.left.count(v) != 0;
        if (ul == vl) throw std::invalid_argument("bipartition: edge inside one part");
    }
}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

struct HkState {
    const Graph& g;
    std::vector<VertexId> left;
    std::map<VertexId, VertexId> match;  // both directions
    std::map<VertexId, std::size_t> layer;

    bool bfs() {
        std::deque<VertexId> queue;
        layer.clear();
        for (VertexId u : left)
            if (!match.count(u)) {
                layer[u] = 0;
                queue.push_back(u);
            }
        bool found_free_right = false;
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (VertexId w : g.neighbors(u)) {
                auto it = match.find(w);
                if (it == match.end()) {
                    found_free_right = true;
                } else if (!layer.count(it->second)) {
                    layer[it->second] = layer[u] + 1;
                    queue.push_back(it->second);
                }
            }
        }
        return found_free_right;
    }

    bool dfs(VertexId u) {
        std::size_t lu = layer.at(u);
        layer[u] = kUnreached;  // visited
        for (VertexId w : g.neighbors(u)) {
            auto it = match.find(w);
            if (it == match.end()) {
                match[u] = w;
                match[w] = u;
                return true;
            }
            VertexId u2 = it->second;
            auto lit = layer.find(u2);
            if (lit != layer.end() && lit->second == lu + 1 && dfs(u2)) {
                match[u] = w;
                match[w] = u;
                return true;
            }
        }
        return false;
    }
};

}  // namespace

Matching maximum_bipartite_matching(const Graph& g, const Bipartition& parts) {
    validate_bipartition(g, parts);
    HkState hk{g, {parts.left.begin(), parts.left.end()}, {}, {}};
    while (hk.bfs()) {
        for (VertexId u : hk.left)
            if (!hk.match.count(u) && hk.layer.count(u) && hk.layer.at(u) != kUnreached)
                hk.dfs(u);
    }
    Matching m;
    for (const auto& [u, v] : hk.match)
        if (parts.left.count(u)) m.add(u, v);
    return m;
}

bool has_augmenting_path(const Graph& g, const Bipartition& parts, const Matching& m) {
    // One BFS round over alternating paths from unmatched left vertices.
    std::deque<VertexId> queue;
    VertexSet seen;
    for (VertexId u : parts.left)
        if (!m.saturates(u)) {
            queue.push_back(u);
            seen.insert(u);
        }
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u)) {
            auto p = m.partner(w);
            if (!p) return true;
            if (seen.insert(*p).second) queue.push_back(*p);
        }
    }
    return false;
}

Matching greedy_maximal_matching(const Graph& g) {
    Matching m;
    for (VertexId u : g.vertices()) {
        if (m.saturates(u)) continue;
        for (VertexId v : g.neighbors(u)) {
            if (!m.saturates(v)) {
                m.add(u, v);
                break;
            }
        }
    }
    return m;
}

VertexSet konig_cover(const Graph& g, const Bipartition& parts, const Matching& m) {
    validate_bipartition(g, parts);
    if (!m.valid_for(g)) throw std::invalid_argument("konig_cover: matching uses non-edges");

    // Alternating reachability from unmatched left vertices: left->right along
    // any edge, right->left along matching edges only.
    VertexSet reached;
    std::deque<VertexId> queue;
    for (VertexId u : parts.left)
        if (!m.saturates(u)) {
            reached.insert(u);
            queue.push_back(u);
        }
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u)) {
            if (!reached.insert(w).second) continue;
            if (auto p = m.partner(w); p && reached.insert(*p).second) queue.push_back(*p);
        }
    }

    VertexSet cover;
    for (VertexId u : parts.left)
        if (!reached.count(u)) cover.insert(u);
    for (VertexId w : parts.right)
        if (reached.count(w)) cover.insert(w);

    // Koenig equality certifies maximality; a leftover augmenting path shows
    // up as an uncovered edge or an oversized cover.
    if (cover.size() != m.size() || !is_vertex_cover(g, cover))
        throw std::invalid_argument("konig_cover: matching is not maximum");
    return cover;
}

}  // namespace vck
