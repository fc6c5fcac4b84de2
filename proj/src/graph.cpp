#include "vck/graph.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace vck {

std::ostream& operator<<(std::ostream& os, VertexId v) { return os << v.value; }

VertexId Graph::add_vertex() {
    VertexId v{next_id_++};
    adj_.emplace(v, VertexSet{});
    return v;
}

void Graph::add_vertex(VertexId v) {
    if (v.value < next_id_)
        throw std::invalid_argument("vertex id already allocated in this graph");
    adj_.emplace(v, VertexSet{});
    next_id_ = v.value + 1;
}

void Graph::remove_vertex(VertexId v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("remove_vertex: unknown vertex");
    for (VertexId w : it->second) {
        adj_.at(w).erase(v);
        --edge_count_;
    }
    adj_.erase(it);
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    auto iu = adj_.find(u);
    auto iv = adj_.find(v);
    if (iu == adj_.end() || iv == adj_.end())
        throw std::invalid_argument("add_edge: unknown vertex");
    if (iu->second.insert(v).second) {
        iv->second.insert(u);
        ++edge_count_;
    }
    assert(adj_.at(u).count(v) == adj_.at(v).count(u));
}

void Graph::remove_edge(VertexId u, VertexId v) {
    auto iu = adj_.find(u);
    auto iv = adj_.find(v);
    if (iu == adj_.end() || iv == adj_.end())
        throw std::invalid_argument("remove_edge: unknown vertex");
    if (iu->second.erase(v)) {
        iv->second.erase(u);
        --edge_count_;
    }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
}

const VertexSet& Graph::neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("neighbors: unknown vertex");
    return it->second;
}

VertexSet Graph::closed_neighborhood(VertexId v) const {
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
}

VertexSet Graph::vertices() const {
    VertexSet out;
    for (const auto& [v, _] : adj_) out.insert(v);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (const auto& [v, nbrs] : adj_)
        for (VertexId w : nbrs)
            if (v < w) out.emplace_back(v, w);
    return out;
}

VertexId Graph::contract(const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("contract: empty set");
    for (VertexId v : s)
        if (!has_vertex(v)) throw std::invalid_argument("contract: unknown vertex in set");
    VertexSet nbhd = set_neighborhood(*this, s);
    for (VertexId v : s) remove_vertex(v);
    VertexId z = add_vertex();
    for (VertexId w : nbhd) add_edge(z, w);
    return z;
}

std::size_t induced_edge_count(const Graph& g, const VertexSet& s) {
    std::size_t count = 0;
    for (VertexId v : s) {
        if (!g.has_vertex(v)) throw std::invalid_argument("induced_edge_count: unknown vertex");
        for (VertexId w : g.neighbors(v))
            if (v < w && s.count(w)) ++count;
    }
    return count;
}

VertexSet set_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out;
    for (VertexId v : s)
        for (VertexId w : g.neighbors(v))
            if (!s.count(w)) out.insert(w);
    return out;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    for (VertexId v : s)
        for (VertexId w : g.neighbors(v))
            if (v < w && s.count(w)) return false;
    return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (VertexId v : s)
        for (VertexId w : s)
            if (v < w && !g.has_edge(v, w)) return false;
    return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    for (const auto& [u, w] : g.edges())
        if (!s.count(u) && !s.count(w)) return false;
    return true;
}

}  // namespace vck
