#pragma once

#include <cstdint>

#include "pae/model.hpp"
#include "pae/rng.hpp"

namespace pae {

struct Trajectory {
    GrowthGraph graph;
    StepLog log;
};

// G1 for the given parameters; validates them.
GrowthGraph init_graph(const ModelParams& params);

// Preferential attachment by uniform index into the endpoint list:
// returns endpoints[floor(u * 2t)], so P(v) = degree(v) / 2t exactly.
// Throws std::invalid_argument unless 0 <= u < 1.
VertexId sample_preferential(const GrowthGraph& g, double u);

// One growth step with the step type already decided. Draw order: one
// uniform per PA sample (one for a vertex-step, two for an edge-step,
// both against the pre-step endpoint list).
StepRecord perform_step(GrowthGraph& g, bool is_vertex_step, RandomStream& rng);

// Drives one trajectory. Per step the draw order is fixed: first one
// uniform deciding vertex-step (u < p) versus edge-step, then the PA
// draws of perform_step. Strictly sequential; distinct generators share
// nothing and may run in parallel.
class TrajectoryGenerator {
public:
    explicit TrajectoryGenerator(const ModelParams& params);

    // Continuation: resume an existing graph with a fresh stream. Used by
    // the two-phase martingale diagnostic.
    TrajectoryGenerator(GrowthGraph graph, double p, std::uint64_t seed);

    StepRecord step();
    void run_to(Step t);

    const GrowthGraph& graph() const { return graph_; }
    GrowthGraph take_graph() { return std::move(graph_); }

private:
    GrowthGraph graph_;
    RandomStream rng_;
    double p_;
};

// Runs steps 2..t_max and returns the final graph plus its replayable log.
Trajectory generate(const ModelParams& params);

// Same trajectory without materializing the log (identical stream).
GrowthGraph generate_graph(const ModelParams& params);

// Rebuilds the graph a log describes; throws std::invalid_argument when a
// record references a vertex that is not alive yet.
GrowthGraph replay(const StepLog& log);

}  // namespace pae
