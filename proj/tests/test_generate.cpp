#include <cmath>

#include "doctest.h"
#include "pae/generate.hpp"
#include "test_util.hpp"

using namespace pae;

TEST_CASE("init_graph validates and returns G1") {
    const GrowthGraph g = init_graph({0.5, 100, 42});
    CHECK(g.t() == 1);
    CHECK(g.num_vertices() == 1);
    CHECK_THROWS_AS(init_graph({2.0, 100, 42}), std::invalid_argument);
}

TEST_CASE("sample_preferential is exact index arithmetic") {
    const GrowthGraph g1 = GrowthGraph::initial();
    CHECK(sample_preferential(g1, 0.0) == 1);
    CHECK(sample_preferential(g1, 0.999) == 1);

    // endpoints [1,1,1,2]: degrees 3 and 1
    GrowthGraph g = GrowthGraph::initial();
    g.add_vertex_step(1);
    CHECK(sample_preferential(g, 0.70) == 1);  // floor(2.8) = 2 -> endpoints[2] = 1
    CHECK(sample_preferential(g, 0.80) == 2);  // floor(3.2) = 3 -> endpoints[3] = 2

    // double loop [1,1,1,1]
    GrowthGraph dl = GrowthGraph::initial();
    dl.add_edge_step(1, 1);
    for (double u : {0.0, 0.3, 0.5, 0.9, 0.999999}) {
        CHECK(sample_preferential(dl, u) == 1);
    }

    CHECK_THROWS_AS(sample_preferential(g, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(sample_preferential(g, -0.1), std::invalid_argument);
}

TEST_CASE("sampling matches degree/2t within 5 sigma over 1e6 draws") {
    const ModelParams params{0.5, 64, 20260810};
    const GrowthGraph g = generate_graph(params);
    const auto two_t = static_cast<double>(2 * g.t());

    constexpr std::uint64_t kDraws = 1'000'000;
    std::vector<std::uint64_t> hits(g.num_vertices() + 1, 0);
    RandomStream rng(7);
    for (std::uint64_t k = 0; k < kDraws; ++k) {
        ++hits[sample_preferential(g, rng.next_uniform())];
    }
    for (VertexId v = 1; v <= g.num_vertices(); ++v) {
        const double q = g.degree(v) / two_t;
        const double expected = kDraws * q;
        const double sigma = std::sqrt(kDraws * q * (1.0 - q));
        CHECK(std::abs(static_cast<double>(hits[v]) - expected) <= 5.0 * sigma);
    }
}

TEST_CASE("perform_step on forced configurations") {
    RandomStream rng(1);

    GrowthGraph g = GrowthGraph::initial();
    const StepRecord v_rec = perform_step(g, true, rng);
    CHECK(v_rec.is_vertex_step());
    CHECK(v_rec.a == 1);  // the only vertex has full mass
    CHECK(g.num_vertices() == 2);
    CHECK(g.degree(1) == 3);
    CHECK(g.degree(2) == 1);

    GrowthGraph h = GrowthGraph::initial();
    const StepRecord e_rec = perform_step(h, false, rng);
    CHECK_FALSE(e_rec.is_vertex_step());
    CHECK(e_rec.a == 1);
    CHECK(e_rec.b == 1);
    CHECK(h.num_vertices() == 1);
    CHECK(h.degree(1) == 4);  // second loop
}

TEST_CASE("doubled edge collapses in the simple view") {
    GrowthGraph g = GrowthGraph::initial();
    g.add_vertex_step(1);
    g.add_edge_step(1, 2);
    g.add_edge_step(2, 1);
    const SimpleView view(g);
    CHECK(view.distinct_neighbor_count(1) == 1);
    CHECK(view.distinct_neighbor_count(2) == 1);
}

TEST_CASE("p = 1 yields the BA tree after the initial loop") {
    const Trajectory traj = generate({1.0, 100, 99});
    CHECK(traj.graph.num_vertices() == 100);
    CHECK(traj.graph.t() == 100);
    CHECK(traj.graph.degree_sum() == 200);
    for (const StepRecord& rec : traj.log.records) CHECK(rec.is_vertex_step());
}

TEST_CASE("p = 0 keeps a single vertex accumulating loops") {
    const Trajectory traj = generate({0.0, 50, 3});
    CHECK(traj.graph.num_vertices() == 1);
    CHECK(traj.graph.degree(1) == 100);
    for (const StepRecord& rec : traj.log.records) {
        CHECK_FALSE(rec.is_vertex_step());
        CHECK(rec.a == 1);
        CHECK(rec.b == 1);
    }
}

TEST_CASE("identical params give identical logs, different seeds differ") {
    const ModelParams params{0.4, 500, 123456};
    const Trajectory a = generate(params);
    const Trajectory b = generate(params);
    CHECK(a.log == b.log);
    CHECK(a.graph == b.graph);

    ModelParams other = params;
    other.seed = 123457;
    CHECK_FALSE(generate(other).log == a.log);
}

TEST_CASE("replay rebuilds the generated graph field by field") {
    const Trajectory traj = generate({0.37, 2000, 777});
    const GrowthGraph rebuilt = replay(traj.log);
    CHECK(rebuilt == traj.graph);

    StepLog corrupt = traj.log;
    corrupt.records[10] = {4000, 4001};
    CHECK_THROWS_AS(replay(corrupt), std::invalid_argument);
}

TEST_CASE("generate_graph matches generate on the same stream") {
    const ModelParams params{0.6, 300, 2024};
    CHECK(generate_graph(params) == generate(params).graph);
}

TEST_CASE("edge and degree-sum invariants hold after every step") {
    TrajectoryGenerator gen(ModelParams{0.5, 400, 5});
    while (gen.graph().t() < 400) {
        gen.step();
        CHECK(gen.graph().degree_sum() == 2 * gen.graph().t());
    }
    // N(t) - 1 counts the vertex-steps
    CHECK(gen.graph().num_vertices() >= 1);
    CHECK(gen.graph().num_vertices() <= 400);
}

TEST_CASE("mean vertex count tracks (t-1)p within 4 sigma") {
    constexpr std::uint64_t kReplicas = 400;
    constexpr Step kT = 200;
    const double p = 0.5;
    double sum = 0;
    for (std::uint64_t r = 0; r < kReplicas; ++r) {
        const GrowthGraph g = generate_graph({p, kT, mix_seed(11, {r})});
        sum += static_cast<double>(g.num_vertices()) - 1.0;
    }
    const double mean = sum / kReplicas;
    const double expect = (kT - 1) * p;
    const double bound = 4.0 * std::sqrt((kT - 1) * p * (1 - p) / kReplicas);
    CHECK(std::abs(mean - expect) <= bound);
}

TEST_CASE("continuation generator extends a frozen graph") {
    const GrowthGraph base = generate_graph({0.5, 100, 42});
    TrajectoryGenerator cont(base, 0.5, 43);
    cont.run_to(200);
    CHECK(cont.graph().t() == 200);
    CHECK(cont.graph().degree_sum() == 400);
    // frozen prefix intact
    for (Step s = 1; s <= 100; ++s) CHECK(cont.graph().edge(s) == base.edge(s));
}
