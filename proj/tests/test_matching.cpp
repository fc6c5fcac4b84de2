#include <doctest.h>

#include <random>

#include "support/oracle.hpp"
#include "vck/matching.hpp"

using namespace vck;

namespace {

// Proper 2-coloring of a connected-or-not bipartite graph, as a Bipartition.
Bipartition two_color(const Graph& g) {
    Bipartition parts;
    VertexSet pending = g.vertices();
    std::map<VertexId, int> color;
    while (!pending.empty()) {
        VertexId root = *pending.begin();
        color[root] = 0;
        std::vector<VertexId> stack{root};
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            pending.erase(u);
            for (VertexId w : g.neighbors(u))
                if (!color.count(w)) {
                    color[w] = 1 - color[u];
                    stack.push_back(w);
                }
        }
    }
    for (const auto& [v, c] : color) (c == 0 ? parts.left : parts.right).insert(v);
    return parts;
}

}  // namespace

TEST_CASE("maximum matching on small named graphs") {
    Graph c4 = testsupport::cycle_graph(4);
    CHECK(maximum_bipartite_matching(c4, two_color(c4)).size() == 2);

    Graph k33;
    std::vector<VertexId> l, r;
    for (int i = 0; i < 3; ++i) l.push_back(k33.add_vertex());
    for (int i = 0; i < 3; ++i) r.push_back(k33.add_vertex());
    for (VertexId u : l)
        for (VertexId v : r) k33.add_edge(u, v);
    Bipartition parts{{l.begin(), l.end()}, {r.begin(), r.end()}};
    CHECK(maximum_bipartite_matching(k33, parts).size() == 3);

    Graph star = testsupport::star_graph(5);
    CHECK(maximum_bipartite_matching(star, two_color(star)).size() == 1);
}

TEST_CASE("an edge inside a part is rejected") {
    Graph tri = testsupport::complete_graph(3);
    VertexSet vs = tri.vertices();
    Bipartition bad{{*vs.begin(), *std::next(vs.begin())}, {*vs.rbegin()}};
    CHECK_THROWS_AS(maximum_bipartite_matching(tri, bad), std::invalid_argument);
}

TEST_CASE("greedy maximal matching") {
    CHECK(greedy_maximal_matching(Graph{}).size() == 0);

    Graph disjoint;
    for (int i = 0; i < 4; ++i) {
        VertexId a = disjoint.add_vertex();
        VertexId b = disjoint.add_vertex();
        disjoint.add_edge(a, b);
    }
    CHECK(greedy_maximal_matching(disjoint).size() == 4);

    CHECK(greedy_maximal_matching(testsupport::complete_graph(3)).size() == 1);

    // maximality: no edge addable
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testsupport::random_graph(rng, 9, 0.3);
        Matching m = greedy_maximal_matching(g);
        CHECK(m.valid_for(g));
        for (const auto& [u, v] : g.edges())
            CHECK((m.saturates(u) || m.saturates(v)));
    }
}

TEST_CASE("konig cover equals the matching size and covers everything") {
    Graph c4 = testsupport::cycle_graph(4);
    Bipartition parts = two_color(c4);
    Matching m = maximum_bipartite_matching(c4, parts);
    VertexSet cover = konig_cover(c4, parts, m);
    CHECK(cover.size() == 2);
    CHECK(is_vertex_cover(c4, cover));

    Graph edge = testsupport::path_graph(2);
    Bipartition eparts = two_color(edge);
    VertexSet ecover = konig_cover(edge, eparts, maximum_bipartite_matching(edge, eparts));
    CHECK(ecover.size() == 1);

    Graph p4 = testsupport::path_graph(4);
    Bipartition pparts = two_color(p4);
    VertexSet pcover = konig_cover(p4, pparts, maximum_bipartite_matching(p4, pparts));
    CHECK(pcover.size() == 2);
    CHECK(is_vertex_cover(p4, pcover));
    CHECK(static_cast<int>(pcover.size()) == testsupport::naive_min_vc(p4));
}

TEST_CASE("konig cover rejects non-maximum matchings") {
    Graph p4 = testsupport::path_graph(4);
    Bipartition parts = two_color(p4);
    Matching small;  // empty matching is not maximum here
    CHECK_THROWS_AS(konig_cover(p4, parts, small), std::invalid_argument);
}

TEST_CASE("random bipartite graphs: matching matches brute force, cover certifies") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        // random bipartite graph on <= 12 vertices
        int nl = 1 + int(rng() % 6), nr = 1 + int(rng() % 6);
        Graph g;
        std::vector<VertexId> l, r;
        for (int i = 0; i < nl; ++i) l.push_back(g.add_vertex());
        for (int i = 0; i < nr; ++i) r.push_back(g.add_vertex());
        for (VertexId u : l)
            for (VertexId v : r)
                if (rng() % 100 < 40) g.add_edge(u, v);
        Bipartition parts{{l.begin(), l.end()}, {r.begin(), r.end()}};
        Matching m = maximum_bipartite_matching(g, parts);
        CHECK(m.valid_for(g));
        CHECK(static_cast<int>(m.size()) == testsupport::naive_max_matching(g));
        CHECK(!has_augmenting_path(g, parts, m));
        VertexSet cover = konig_cover(g, parts, m);
        CHECK(cover.size() == m.size());
        CHECK(is_vertex_cover(g, cover));
    }
}
