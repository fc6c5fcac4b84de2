#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/oracle.hpp"
#include "vck/smallgraph.hpp"

using namespace vck;

TEST_CASE("unlabeled enumeration counts match the known sequence") {
    // number of graphs / connected graphs on n unlabeled vertices
    const int graphs[] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
    const int connected[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 7; ++n) {
        auto all = all_unlabeled_graphs(n);
        CHECK(static_cast<int>(all.size()) == graphs[n]);
        int conn = static_cast<int>(std::count_if(all.begin(), all.end(),
                                                  [](const SmallGraph& g) { return is_connected(g); }));
        CHECK(conn == connected[n]);
    }
    auto all8 = all_unlabeled_graphs(8);
    CHECK(static_cast<int>(all8.size()) == graphs[8]);
    CHECK(std::count_if(all8.begin(), all8.end(),
                        [](const SmallGraph& g) { return is_connected(g); }) == connected[8]);
}

TEST_CASE("canonical code is invariant under relabeling") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + int(rng() % 7);
        SmallGraph g;
        g.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) g.add_edge(i, j);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        SmallGraph h;
        h.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (g.has_edge(i, j)) h.add_edge(perm[i], perm[j]);
        CHECK(canonical_code(g) == canonical_code(h));
    }
}

TEST_CASE("distinct small graphs get distinct codes") {
    // P3 vs K3 vs K2+K1
    SmallGraph p3{3, {}}, k3{3, {}}, k2{3, {}};
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    k2.add_edge(0, 1);
    CHECK(canonical_code(p3) != canonical_code(k3));
    CHECK(canonical_code(p3) != canonical_code(k2));
}

TEST_CASE("graph conversions round-trip") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testsupport::random_graph(rng, 1 + int(rng() % 9), 0.35);
        std::vector<VertexId> ids;
        SmallGraph s = to_small(g, ids);
        CHECK(s.n == static_cast<int>(g.vertex_count()));
        CHECK(s.edge_count() == static_cast<int>(g.edge_count()));
        Graph back = to_graph(s);
        CHECK(canonical_code(to_small(back)) == canonical_code(s));
    }
}

TEST_CASE("covers() agrees with the definition") {
    SmallGraph p3{3, {}};
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK(covers(p3, 0b010));
    CHECK(!covers(p3, 0b001));
    CHECK(covers(p3, 0b101));
    CHECK(!covers(p3, 0b000));
}
