#include <doctest.h>

#include <random>

#include "support/oracle.hpp"
#include "vck/classic_kernels.hpp"
#include "vck/degree_kernels.hpp"

using namespace vck;

namespace {

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out = a;
    std::map<VertexId, VertexId> m;
    for (VertexId v : b.vertices()) m[v] = out.add_vertex();
    for (const auto& [u, v] : b.edges()) out.add_edge(m.at(u), m.at(v));
    return out;
}

// Decision by the naive test oracle.
bool oracle_decide(const Graph& g, int k) { return testsupport::naive_min_vc(g) <= k; }

// Outcome agrees with the oracle on the ORIGINAL instance for all budgets.
void check_outcome_sound(const Graph& original, int k, const KernelOutcome& out) {
    bool truth = oracle_decide(original, k);
    if (out.is_no()) {
        CHECK(!truth);
    } else if (out.is_yes()) {
        CHECK(truth);
    } else {
        REQUIRE(out.instance.has_value());
        CHECK(truth == oracle_decide(out.instance->graph, out.instance->budget));
    }
}

}  // namespace

TEST_CASE("isolated-vertex rule") {
    Graph g = disjoint_union(testsupport::complete_graph(3), testsupport::star_graph(0));
    KernelOutcome out = rule_isolated({g, 2});
    REQUIRE(out.is_kernel());
    CHECK(out.instance->graph.vertex_count() == 3);
    CHECK(out.instance->budget == 2);

    Graph iso;
    for (int i = 0; i < 3; ++i) iso.add_vertex();
    KernelOutcome out2 = rule_isolated({iso, 0});
    CHECK(out2.is_yes());
    CHECK(out2.instance->graph.vertex_count() == 0);

    Graph c4 = testsupport::cycle_graph(4);
    KernelOutcome out3 = rule_isolated({c4, 2});
    CHECK(out3.trace.empty());
    CHECK(out3.instance->graph == c4);
}

TEST_CASE("high-degree rule") {
    KernelOutcome star = rule_high_degree({testsupport::star_graph(5), 1});
    CHECK(star.is_yes());
    CHECK(star.instance->budget == 0);

    Graph two_stars = disjoint_union(testsupport::star_graph(3), testsupport::star_graph(3));
    CHECK(testsupport::naive_min_vc(two_stars) == 2);
    CHECK(rule_high_degree({two_stars, 1}).is_no());

    Graph c4 = testsupport::cycle_graph(4);
    KernelOutcome unchanged = rule_high_degree({c4, 2});
    CHECK(unchanged.trace.empty());
    CHECK(unchanged.instance->graph == c4);
}

TEST_CASE("buss size check") {
    Graph matching6;
    for (int i = 0; i < 6; ++i) {
        VertexId a = matching6.add_vertex();
        VertexId b = matching6.add_vertex();
        matching6.add_edge(a, b);
    }
    CHECK(testsupport::naive_min_vc(matching6) == 6);
    CHECK(buss_size_check({matching6, 2}).is_no());  // 6 edges > k^2 = 4

    Graph c4 = testsupport::cycle_graph(4);
    KernelOutcome pass = buss_size_check({c4, 2});
    CHECK(pass.is_kernel());
    CHECK(pass.instance->graph == c4);

    CHECK(buss_size_check({Graph{}, 0}).is_yes());

    Graph with_iso = disjoint_union(c4, testsupport::star_graph(0));
    CHECK_THROWS_AS(buss_size_check({with_iso, 2}), std::logic_error);
    CHECK_THROWS_AS(buss_size_check({testsupport::star_graph(5), 2}), std::logic_error);
}

TEST_CASE("buss kernelization meets the quadratic bounds") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = testsupport::random_graph(rng, 4 + int(rng() % 8), 0.3);
        int k = testsupport::naive_min_vc(g);
        KernelOutcome out = buss_kernelize({g, k});
        check_outcome_sound(g, k, out);
        if (out.is_kernel()) {
            auto kk = static_cast<std::size_t>(out.instance->budget);
            CHECK(out.instance->graph.vertex_count() <= kk * kk + kk);
            CHECK(out.instance->graph.edge_count() <= kk * kk);
            // idempotence
            KernelOutcome again = buss_kernelize(*out.instance);
            CHECK(again.is_kernel());
            CHECK(again.instance->graph == out.instance->graph);
            CHECK(again.instance->budget == out.instance->budget);
        }
    }
}

TEST_CASE("find_crown_or_matching on the star finds the head at the center") {
    Graph star = testsupport::star_graph(4);
    VertexId center = *star.vertices().begin();
    auto found = find_crown_or_matching(star, 1);
    REQUIRE(std::holds_alternative<CrownDecomposition>(found));
    const auto& cd = std::get<CrownDecomposition>(found);
    validate_crown(star, cd);
    CHECK(cd.head == VertexSet{center});
    CHECK(!cd.crown.empty());
    CHECK(!cd.crown.count(center));
}

TEST_CASE("find_crown_or_matching returns a large matching when one exists") {
    int k = 3;
    Graph g;
    for (int i = 0; i < k + 1; ++i) {
        VertexId a = g.add_vertex();
        VertexId b = g.add_vertex();
        g.add_edge(a, b);
    }
    // |V| = 2k+2 < 3k+1 for k=3; pad with pendant pairs to reach 3k+1 = 10
    while (g.vertex_count() < 3 * static_cast<std::size_t>(k) + 1) {
        VertexId a = g.add_vertex();
        VertexId b = g.add_vertex();
        g.add_edge(a, b);
    }
    auto found = find_crown_or_matching(g, k);
    REQUIRE(std::holds_alternative<Matching>(found));
    CHECK(std::get<Matching>(found).size() >= static_cast<std::size_t>(k) + 1);
}

TEST_CASE("find_crown_or_matching enforces its preconditions") {
    Graph c4 = testsupport::cycle_graph(4);
    CHECK_THROWS_AS(find_crown_or_matching(c4, 2), std::invalid_argument);  // |V| <= 3k
    Graph with_iso = disjoint_union(testsupport::star_graph(4), testsupport::star_graph(0));
    CHECK_THROWS_AS(find_crown_or_matching(with_iso, 1), std::invalid_argument);
}

TEST_CASE("crown rule removes crown and head and pays for the head") {
    Graph star = testsupport::star_graph(4);
    auto cd = std::get<CrownDecomposition>(find_crown_or_matching(star, 1));
    KernelOutcome out = rule_crown({star, 1}, cd);
    REQUIRE(!out.is_no());
    CHECK(out.instance->budget == 0);
    // remaining vertices are isolated leftovers; the instance is a yes
    KernelOutcome cleaned = rule_isolated(*out.instance);
    CHECK(cleaned.is_yes());

    // |H| > k reports no
    CHECK(rule_crown({star, 0}, cd).is_no());

    CrownDecomposition bogus;
    bogus.crown = star.vertices();
    CHECK_THROWS_AS(rule_crown({star, 1}, bogus), std::invalid_argument);
}

TEST_CASE("crown kernelization reaches 3k vertices and keeps the answer") {
    Graph c4 = testsupport::cycle_graph(4);
    KernelOutcome small = crown_kernelize({c4, 2});
    CHECK(small.is_kernel());
    CHECK(small.instance->graph == c4);  // already at most 3k vertices

    KernelOutcome star9 = crown_kernelize({testsupport::star_graph(9), 1});
    CHECK(star9.is_yes());

    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testsupport::random_graph(rng, 6 + int(rng() % 7), 0.25);
        int k = testsupport::naive_min_vc(g);
        KernelOutcome out = crown_kernelize({g, k});
        check_outcome_sound(g, k, out);
        if (out.is_kernel()) {
            CHECK(out.instance->graph.vertex_count() <=
                  3 * static_cast<std::size_t>(out.instance->budget));
            KernelOutcome again = crown_kernelize(*out.instance);
            CHECK(again.is_kernel());
            CHECK(again.instance->graph == out.instance->graph);
        }
    }
}

TEST_CASE("half-integral relaxation solutions on named graphs") {
    Graph tri = testsupport::complete_graph(3);
    HalfIntegralSolution lp = solve_lp_half_integral(tri);
    CHECK(lp.twice_objective == 3);  // objective 1.5
    CHECK(lp.halves().size() == 3);
    CHECK(lp.feasible_for(tri));

    Graph edge = testsupport::path_graph(2);
    CHECK(solve_lp_half_integral(edge).twice_objective == 2);

    Graph star3 = testsupport::star_graph(3);
    HalfIntegralSolution slp = solve_lp_half_integral(star3);
    CHECK(slp.twice_objective == 2);  // objective 1
    VertexId center = *star3.vertices().begin();
    CHECK(slp.ones() == VertexSet{center});
    CHECK(slp.zeros().size() == 3);
}

TEST_CASE("relaxation optimum matches the naive half-integral scan") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testsupport::random_graph(rng, 1 + int(rng() % 8), 0.4);
        HalfIntegralSolution lp = solve_lp_half_integral(g);
        CHECK(lp.feasible_for(g));
        CHECK(lp.twice_objective == testsupport::naive_lp_twice_objective(g));
    }
}

TEST_CASE("relaxation-based rule") {
    CHECK(rule_lp({testsupport::complete_graph(3), 1}).is_no());

    KernelOutcome star = rule_lp({testsupport::star_graph(3), 1});
    CHECK(star.is_yes());
    CHECK(star.instance->budget == 0);
    CHECK(star.instance->graph.vertex_count() == 0);

    Graph c4 = testsupport::cycle_graph(4);
    KernelOutcome even = rule_lp({c4, 2});
    CHECK(even.is_kernel());
    CHECK(even.instance->graph == c4);  // all-half optimum keeps everything
    CHECK(even.instance->graph.vertex_count() <=
          2 * static_cast<std::size_t>(even.instance->budget));

    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = testsupport::random_graph(rng, 3 + int(rng() % 9), 0.35);
        int k = testsupport::naive_min_vc(g);
        KernelOutcome out = rule_lp({g, k});
        check_outcome_sound(g, k, out);
        if (out.is_kernel()) {
            CHECK(out.instance->graph.vertex_count() <=
                  2 * static_cast<std::size_t>(out.instance->budget));
            KernelOutcome again = rule_lp(*out.instance);
            CHECK(again.is_kernel());
            CHECK(again.instance->graph == out.instance->graph);  // idempotent
        }
    }
}

TEST_CASE("kernel traces lift covers back to the original graph") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testsupport::random_graph(rng, 5 + int(rng() % 7), 0.3);
        int k = testsupport::naive_min_vc(g);
        for (auto* kernelizer : {&crown_kernelize, &buss_kernelize, &rule_lp}) {
            KernelOutcome out = (*kernelizer)({g, k});
            if (out.is_no()) continue;
            VertexSet kernel_cover;
            if (out.is_kernel()) {
                const Graph& kg = out.instance->graph;
                // greedy cover of the kernel capped only by validity
                for (const auto& [u, v] : kg.edges())
                    if (!kernel_cover.count(u) && !kernel_cover.count(v)) kernel_cover.insert(u);
            }
            VertexSet lifted = lift_solution(g, out.trace, kernel_cover);
            CHECK(is_vertex_cover(g, lifted));
            CHECK(lifted.size() ==
                  kernel_cover.size() + static_cast<std::size_t>(out.trace.total_budget_delta()));
        }
    }
}
