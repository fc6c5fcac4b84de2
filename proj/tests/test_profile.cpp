#include <doctest.h>

#include <random>
#include <sstream>

#include "support/oracle.hpp"
#include "vck/degree_kernels.hpp"
#include "vck/exact_solver.hpp"
#include "vck/profile.hpp"

using namespace vck;

namespace {

// X bitmask index: bit i set when external class i is fully covered.
// Expected 16-entry tables for the two degree-four source patterns.
const std::vector<int> kDisjointTable = {4, 4, 4, 4, 4, 3, 3, 3, 4, 3, 3, 3, 4, 3, 3, 3};
const std::vector<int> kPathTable = {4, 4, 4, 4, 4, 3, 4, 3, 4, 3, 3, 3, 3, 2, 3, 2};

AttachmentPattern single_boundary_edge() {
    // single edge x1 - w, x1 attached to class 0, w unattached
    AttachmentPattern p;
    p.core.n = 2;
    p.t = 1;
    p.core.add_edge(0, 1);
    p.attach[0] = 1;
    return p;
}

}  // namespace

TEST_CASE("glue identifies equal labels") {
    // two 1-boundaried single edges glue to a path on three vertices
    BoundariedGraph g, h;
    VertexId gx = g.core.add_vertex();
    g.core.add_edge(gx, g.core.add_vertex());
    g.boundary = {gx};
    VertexId hx = h.core.add_vertex();
    h.core.add_edge(hx, h.core.add_vertex());
    h.boundary = {hx};
    Graph glued = glue(g, h);
    CHECK(glued.vertex_count() == 3);
    CHECK(glued.edge_count() == 2);

    // edge counts add when the interfaces bring no shared edges
    BoundariedGraph w = pendant_witness(3);
    BoundariedGraph p;
    std::vector<VertexId> xs;
    for (int i = 0; i < 3; ++i) xs.push_back(p.core.add_vertex());
    VertexId inner = p.core.add_vertex();
    for (VertexId x : xs) p.core.add_edge(x, inner);
    p.boundary = xs;
    Graph big = glue(w, p);
    CHECK(big.vertex_count() == w.core.vertex_count() + p.core.vertex_count() - 3);
    CHECK(big.edge_count() == w.core.edge_count() + p.core.edge_count());
}

TEST_CASE("glue rejects bad inputs") {
    BoundariedGraph g;
    VertexId x = g.core.add_vertex();
    g.core.add_edge(x, g.core.add_vertex());
    g.boundary = {x};
    BoundariedGraph two = pendant_witness(2);
    CHECK_THROWS_AS(glue(g, two), std::invalid_argument);  // t mismatch

    // non-strong left graph
    BoundariedGraph ns;
    VertexId a = ns.core.add_vertex();
    VertexId b = ns.core.add_vertex();
    ns.core.add_edge(a, b);
    ns.boundary = {a, b};
    CHECK_THROWS_AS(glue(ns, ns), std::invalid_argument);

    // isolated boundary vertex
    BoundariedGraph iso;
    iso.boundary = {iso.core.add_vertex()};
    CHECK_THROWS_AS(validate_boundaried(iso), std::invalid_argument);
}

TEST_CASE("worked composite: glue, then read two profile entries off the cover structure") {
    // G: seven interior vertices u0..u6 plus strong boundary x0..x2;
    // H: interface x0..x2 with an internal x0-x1 edge plus chain v0-v1-v2.
    BoundariedGraph g;
    std::vector<VertexId> u, x;
    for (int i = 0; i < 7; ++i) u.push_back(g.core.add_vertex());
    for (int i = 0; i < 3; ++i) x.push_back(g.core.add_vertex());
    const std::vector<std::pair<int, int>> uu = {{0, 1}, {0, 2}, {0, 6}, {1, 2}, {1, 4},
                                                 {1, 3}, {2, 4}, {2, 5}, {3, 4}};
    const std::vector<std::pair<int, int>> ux = {{2, 1}, {3, 2}, {4, 1}, {4, 2},
                                                 {5, 0}, {5, 1}, {6, 0}};
    for (auto [i, j] : uu) g.core.add_edge(u[i], u[j]);
    for (auto [i, j] : ux) g.core.add_edge(u[i], x[j]);
    g.boundary = x;
    CHECK(is_strong(g));

    BoundariedGraph h;
    std::vector<VertexId> hx, v;
    for (int i = 0; i < 3; ++i) hx.push_back(h.core.add_vertex());
    for (int i = 0; i < 3; ++i) v.push_back(h.core.add_vertex());
    h.core.add_edge(hx[0], v[0]);
    h.core.add_edge(hx[0], v[1]);
    h.core.add_edge(hx[1], v[1]);
    h.core.add_edge(hx[2], v[1]);
    h.core.add_edge(hx[2], v[2]);
    h.core.add_edge(v[0], v[1]);
    h.core.add_edge(v[1], v[2]);
    h.core.add_edge(hx[0], hx[1]);
    h.boundary = hx;

    Graph glued = glue(g, h);
    CHECK(glued.vertex_count() == 13);
    CHECK(glued.edge_count() == 24);

    // profile of H against this witness via the literal definition
    AttachmentPattern hp;
    hp.core = to_small(h.core);
    hp.t = 3;
    // boundary ids are the first three added vertices of h.core
    for (int i = 0; i < 3; ++i) hp.attach[i] = std::uint8_t(1u << i);
    Profile lit = verify_profile_against_witness(hp, g);
    CHECK(lit.table[0b100] == 4);
    CHECK(lit.table[0b111] == 3);
    // wherever this witness realizes a compatibility class, the literal value
    // matches the forcing computation
    Profile direct = compute_profile(hp);
    for (std::size_t xset = 0; xset < lit.table.size(); ++xset)
        if (lit.table[xset] != Profile::kInfinity) CHECK(lit.table[xset] == direct.table[xset]);
}

TEST_CASE("forcing profile on the single-edge pattern") {
    Profile p = compute_profile(single_boundary_edge());
    CHECK(p.table[0] == 1);  // x1 forced by its uncovered class
    CHECK(p.table[1] == 1);  // the internal edge still needs one endpoint
}

TEST_CASE("the two degree-four source patterns reproduce their published tables") {
    Profile disjoint = compute_profile(deg4_two_disjoint_edges_pattern());
    CHECK(disjoint.table == kDisjointTable);
    Profile path = compute_profile(deg4_path_two_edges_pattern());
    CHECK(path.table == kPathTable);

    // caption witnesses: X = {0,2,3} admits {u,1,2} (size 3) and {u,1} (size 2)
    CHECK(disjoint.table[0b1101] == 3);
    CHECK(path.table[0b1101] == 2);

    // replacements carry the same tables
    CHECK(compute_profile(deg4_disjoint_replacement_pattern()).table == kDisjointTable);
    CHECK(compute_profile(deg4_path_replacement_pattern()).table == kPathTable);
}

TEST_CASE("profiles are monotone and finite") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + int(rng() % 5);
        int t = 1 + int(rng() % 3);
        AttachmentPattern p;
        p.core.n = n;
        p.t = t;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) p.core.add_edge(i, j);
        for (int i = 0; i < n; ++i) p.attach[i] = std::uint8_t(rng() % (1u << t));
        Profile pr = compute_profile(p);
        for (std::uint32_t x = 0; x < (1u << t); ++x) {
            CHECK(pr.table[x] != Profile::kInfinity);
            for (std::uint32_t y = 0; y < (1u << t); ++y)
                if ((x & y) == x) CHECK(pr.table[x] >= pr.table[y]);  // x subset of y
        }
    }
}

TEST_CASE("forcing and literal-gluing profiles agree on random patterns and witnesses") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + int(rng() % 6);
        int t = 1 + int(rng() % 3);
        AttachmentPattern p;
        p.core.n = n;
        p.t = t;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 100 < 40) p.core.add_edge(i, j);
        for (int i = 0; i < n; ++i) p.attach[i] = std::uint8_t(rng() % (1u << t));
        Profile direct = compute_profile(p);
        CHECK(direct == verify_profile_against_witness(p, pendant_witness(t)));

        // doubled pendant witness: every class has two private externals
        BoundariedGraph doubled;
        std::vector<VertexId> xs;
        for (int i = 0; i < t; ++i) xs.push_back(doubled.core.add_vertex());
        for (int i = 0; i < t; ++i) {
            doubled.core.add_edge(xs[i], doubled.core.add_vertex());
            doubled.core.add_edge(xs[i], doubled.core.add_vertex());
        }
        doubled.boundary = xs;
        CHECK(direct == verify_profile_against_witness(p, doubled));
    }
}

TEST_CASE("equivalence constants") {
    CHECK(check_equivalence(deg4_two_disjoint_edges_pattern(),
                            deg4_disjoint_replacement_pattern()) == 0);
    CHECK(check_equivalence(deg4_path_two_edges_pattern(), deg4_path_replacement_pattern()) == 0);

    // adding a detached internal edge shifts the whole table by one
    AttachmentPattern base = deg4_disjoint_replacement_pattern();
    AttachmentPattern plus = base;
    plus.core.n = 6;
    plus.core.add_edge(4, 5);
    CHECK(check_equivalence(plus, base) == 1);
    CHECK(!check_equivalence(base, plus).has_value());  // would need c = -1

    // generically different patterns are not equivalent
    CHECK(!check_equivalence(deg4_two_disjoint_edges_pattern(), deg4_path_two_edges_pattern())
               .has_value());

    AttachmentPattern tiny = single_boundary_edge();
    CHECK_THROWS_AS(check_equivalence(tiny, deg4_path_two_edges_pattern()),
                    std::invalid_argument);
}

TEST_CASE("discovery finds the identity pattern for a single forced vertex") {
    AttachmentPattern lone;
    lone.core.n = 1;
    lone.t = 1;
    lone.attach[0] = 1;
    Profile target = compute_profile(lone);
    auto found = discover_replacements(target, 1, 1);
    REQUIRE(found.size() == 1);
    CHECK(found[0].shift == 0);
    CHECK(patterns_isomorphic(found[0].pattern, lone));
}

TEST_CASE("discovery rediscovers both degree-four replacements and nothing at n=2") {
    Profile disjoint = compute_profile(deg4_two_disjoint_edges_pattern());
    auto found = discover_replacements(disjoint, 4, 4);
    bool has_expected = false;
    for (const auto& r : found)
        if (r.shift == 0 && patterns_isomorphic(r.pattern, deg4_disjoint_replacement_pattern()))
            has_expected = true;
    CHECK(has_expected);

    Profile path = compute_profile(deg4_path_two_edges_pattern());
    auto found2 = discover_replacements(path, 4, 4);
    bool has_expected2 = false;
    for (const auto& r : found2)
        if (r.shift == 0 && patterns_isomorphic(r.pattern, deg4_path_replacement_pattern()))
            has_expected2 = true;
    CHECK(has_expected2);

    CHECK(discover_replacements(disjoint, 2, 4).empty());
    CHECK_THROWS_AS(discover_replacements(disjoint, 8, 8), std::invalid_argument);  // refused
}

TEST_CASE("swapping a matched pattern equals the direct rewiring rules") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        for (bool disjoint : {true, false}) {
            // gadget with random externals
            Graph host;
            VertexId u = host.add_vertex();
            std::vector<VertexId> nb;
            for (int i = 0; i < 4; ++i) {
                nb.push_back(host.add_vertex());
                host.add_edge(u, nb.back());
            }
            if (disjoint) {
                host.add_edge(nb[0], nb[1]);
                host.add_edge(nb[2], nb[3]);
            } else {
                host.add_edge(nb[1], nb[0]);
                host.add_edge(nb[1], nb[2]);
            }
            int externals = 1 + int(rng() % 4);
            std::vector<VertexId> pool;
            for (int i = 0; i < externals; ++i) pool.push_back(host.add_vertex());
            for (VertexId w : nb)
                for (VertexId e : pool)
                    if (rng() % 2) host.add_edge(w, e);
            for (std::size_t i = 0; i < pool.size(); ++i)
                for (std::size_t j = i + 1; j < pool.size(); ++j)
                    if (rng() % 3 == 0) host.add_edge(pool[i], pool[j]);

            auto m = disjoint ? match_deg4_disjoint(host, u) : match_deg4_path(host, u);
            REQUIRE(m.has_value());
            const AttachmentPattern replacement = disjoint
                                                      ? deg4_disjoint_replacement_pattern()
                                                      : deg4_path_replacement_pattern();
            int k = static_cast<int>(host.vertex_count());
            Instance swapped = swap_equivalent(host, *m, replacement, 0, k);

            KernelOutcome direct =
                disjoint ? apply_degree_four_two_edges_disjoint_at({host, k}, u)
                         : apply_degree_four_two_edges_path_at({host, k}, u);
            REQUIRE(!direct.trace.empty());
            CHECK(swapped.graph == direct.instance->graph);
            CHECK(swapped.budget == direct.instance->budget);

            // oracle: swapping is free at c = 0
            CHECK(testsupport::naive_min_vc(host) == testsupport::naive_min_vc(swapped.graph));
        }
    }
}

TEST_CASE("embedding validation rejects broken matches") {
    Graph host;
    VertexId u = host.add_vertex();
    std::vector<VertexId> nb;
    for (int i = 0; i < 4; ++i) {
        nb.push_back(host.add_vertex());
        host.add_edge(u, nb.back());
    }
    host.add_edge(nb[0], nb[1]);
    host.add_edge(nb[2], nb[3]);
    auto m = match_deg4_disjoint(host, u);
    REQUIRE(m.has_value());

    PatternEmbedding broken = *m;
    broken.core[4] = nb[0];  // duplicate vertex
    CHECK_THROWS_AS(validate_embedding(host, broken), std::invalid_argument);

    PatternEmbedding wrong_ext = *m;
    wrong_ext.interface_sets[0].insert(nb[2]);
    CHECK_THROWS_AS(validate_embedding(host, wrong_ext), std::invalid_argument);

    CHECK_THROWS_AS(
        swap_equivalent(host, *m, deg4_path_replacement_pattern(), 0,
                        static_cast<int>(host.vertex_count())),
        std::invalid_argument);  // patterns not 0-equivalent
}

TEST_CASE("certificates round-trip through their textual form") {
    Profile target = compute_profile(deg4_path_two_edges_pattern());
    DiscoveredReplacement r{deg4_path_replacement_pattern(), 0};
    std::string text = write_certificate(target, r);
    std::istringstream in(text);
    Certificate cert = parse_certificate(in);
    CHECK(cert.target.table == target.table);
    CHECK(cert.shift == 0);
    CHECK(cert.pattern == r.pattern);

    std::istringstream bad("certificate\nt 2\nend\n");
    CHECK_THROWS_AS(parse_certificate(bad), std::invalid_argument);
}
