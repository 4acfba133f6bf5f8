#include "doctest.h"
#include "pae/clique.hpp"
#include "pae/generate.hpp"
#include "test_util.hpp"

using namespace pae;

TEST_CASE("clique on fixtures") {
    CHECK(clique_exact(SimpleView(test::complete_graph(4))).size == 4);
    CHECK(clique_exact(SimpleView(GrowthGraph::initial())).size == 1);

    const GrowthGraph tree = generate_graph({1.0, 64, 5});
    const CliqueResult res = clique_exact(SimpleView(tree));
    CHECK(res.size == 2);
    CHECK(res.exact);
}

TEST_CASE("clique members form a clique of the reported size") {
    RandomStream rng(77);
    for (int rep = 0; rep < 10; ++rep) {
        const GrowthGraph g = test::random_simple_graph(18, 0.45, rng);
        const SimpleView view(g);
        const CliqueResult res = clique_exact(view);
        REQUIRE(res.members.size() == res.size);
        for (std::size_t i = 0; i < res.members.size(); ++i) {
            for (std::size_t j = i + 1; j < res.members.size(); ++j) {
                CHECK(view.adjacent(res.members[i], res.members[j]));
            }
        }
    }
}

TEST_CASE("clique_exact equals brute-force enumeration on small graphs") {
    RandomStream rng(31337);
    for (int rep = 0; rep < 60; ++rep) {
        const auto n = static_cast<VertexId>(4 + rep % 17);
        const double density = 0.15 + 0.1 * (rep % 8);
        const GrowthGraph g = test::random_simple_graph(n, density, rng);
        const SimpleView view(g);
        CHECK(clique_exact(view).size == test::brute_max_clique(view));
    }
}

TEST_CASE("degeneracy order removes low-degree vertices first") {
    const GrowthGraph g = test::make_graph(
        {{1, 2}, {2, 3}, {1, 3}, {3, 4}});  // triangle plus a pendant
    std::vector<std::uint32_t> core;
    const auto order = degeneracy_order(SimpleView(g), &core);
    CHECK(order.size() == 4);
    CHECK(order.front() == 4);  // the pendant
    CHECK(core[4] == 1);
    CHECK(core[1] == 2);
    CHECK(core[2] == 2);
    CHECK(core[3] == 2);
}

TEST_CASE("clique_greedy is a lower bound and saturates at k >= N") {
    const GrowthGraph k4 = test::complete_graph(4);
    const SimpleView view(k4);
    CHECK(clique_greedy(k4, view, 2).size == 2);  // pool caps the answer
    CHECK(clique_greedy(k4, view, 100).size == clique_exact(view).size);

    RandomStream rng(8);
    for (int rep = 0; rep < 15; ++rep) {
        const GrowthGraph g = generate_graph({0.3, 256, mix_seed(3, {static_cast<std::uint64_t>(rep)})});
        const SimpleView v(g);
        const auto exact = clique_exact(v).size;
        for (std::uint32_t k : {5u, 20u, 1000u}) {
            const auto lb = clique_greedy(g, v, k).size;
            CHECK(lb <= exact);
            if (k >= g.num_vertices()) CHECK(lb == exact);
        }
    }
}

TEST_CASE("budget exhaustion flags the result as a bound") {
    RandomStream rng(5);
    const GrowthGraph g = test::random_simple_graph(40, 0.5, rng);
    const SimpleView view(g);
    const CliqueResult res = clique_exact(view, 2);
    CHECK_FALSE(res.exact);
    CHECK(res.size >= 1);
    CHECK(res.size <= clique_exact(view).size);
}

TEST_CASE("solver is deterministic") {
    RandomStream rng(9);
    const GrowthGraph g = test::random_simple_graph(30, 0.4, rng);
    const SimpleView view(g);
    const CliqueResult a = clique_exact(view);
    const CliqueResult b = clique_exact(view);
    CHECK(a.size == b.size);
    CHECK(a.members == b.members);
}
