#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracle.hpp"
#include "vck/exact_solver.hpp"

using namespace vck;

TEST_CASE("brute force on named graphs") {
    CHECK(brute_force_vc(testsupport::cycle_graph(5)).optimum == 3);
    for (int n = 2; n <= 6; ++n)
        CHECK(brute_force_vc(testsupport::complete_graph(n)).optimum == n - 1);
    SolveResult petersen = brute_force_vc(testsupport::petersen_graph());
    CHECK(petersen.optimum == 6);
    CHECK(is_vertex_cover(testsupport::petersen_graph(), petersen.witness));

    std::mt19937_64 rng(1);
    Graph big = testsupport::random_graph(rng, 21, 0.2);
    CHECK_THROWS_AS(brute_force_vc(big), std::invalid_argument);
}

TEST_CASE("brute force agrees with the naive oracle") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = testsupport::random_graph(rng, 1 + int(rng() % 10), 0.4);
        SolveResult r = brute_force_vc(g);
        CHECK(r.optimum == testsupport::naive_min_vc(g));
        CHECK(is_vertex_cover(g, r.witness));
        CHECK(static_cast<int>(r.witness.size()) == r.optimum);
        CHECK(r.nodes > 0);
    }
}

TEST_CASE("branching decision on small instances") {
    Graph c4 = testsupport::cycle_graph(4);
    for (bool kern : {false, true}) {
        DecideResult yes = branch_solve({c4, 2}, kern);
        CHECK(yes.yes);
        CHECK(yes.witness.size() <= 2);
        CHECK(is_vertex_cover(c4, yes.witness));
        CHECK(!branch_solve({c4, 1}, kern).yes);
    }
}

TEST_CASE("branching agrees with brute force and with itself across flags") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testsupport::random_graph(rng, 6 + int(rng() % 10), 0.3);
        SolveResult plain = branch_optimize(g, false);
        SolveResult kernelized = branch_optimize(g, true);
        CHECK(plain.optimum == kernelized.optimum);
        CHECK(is_vertex_cover(g, plain.witness));
        CHECK(is_vertex_cover(g, kernelized.witness));
        CHECK(plain.optimum == brute_force_vc(g).optimum);
    }
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = testsupport::random_graph(rng, 30, 0.15);
        SolveResult plain = branch_optimize(g, false);
        SolveResult kernelized = branch_optimize(g, true);
        CHECK(plain.optimum == kernelized.optimum);
        CHECK(is_vertex_cover(g, kernelized.witness));
        CHECK(static_cast<int>(kernelized.witness.size()) == kernelized.optimum);
    }
}

TEST_CASE("branching factors reproduce the published run-time table") {
    const std::pair<int, double> table[] = {{5, 1.3247},  {6, 1.2852},  {7, 1.2555},
                                            {10, 1.1975}, {25, 1.1005}, {100, 1.0346}};
    for (auto [d, expected] : table)
        CHECK(std::abs(branching_factor(d).lambda - expected) <= 5e-4);
}

TEST_CASE("branching factor facts") {
    CHECK_THROWS_AS(branching_factor(1), std::invalid_argument);
    double prev = branching_factor(2).lambda;
    for (int d = 3; d <= 100; ++d) {
        double cur = branching_factor(d).lambda;
        CHECK(cur < prev);  // strictly decreasing in the branch degree
        prev = cur;
    }
    for (int d : {2, 5, 17, 60, 100}) {
        double l = branching_factor(d).lambda;
        CHECK(l > 1.0);
        CHECK(std::abs(std::pow(l, d) - std::pow(l, d - 1) - 1.0) < 1e-8);
    }
}
