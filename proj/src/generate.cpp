#include "pae/generate.hpp"

#include <stdexcept>
#include <string>

namespace pae {

GrowthGraph init_graph(const ModelParams& params) {
    params.validate();
    return GrowthGraph::initial();
}

VertexId sample_preferential(const GrowthGraph& g, double u) {
    if (!(u >= 0.0 && u < 1.0)) {
        throw std::invalid_argument("sample_preferential: u must lie in [0,1), got " +
                                    std::to_string(u));
    }
    const auto endpoints = g.endpoints();
    auto idx = static_cast<std::uint64_t>(u * static_cast<double>(endpoints.size()));
    if (idx >= endpoints.size()) idx = endpoints.size() - 1;  // u*2t rounding up at the edge
    return endpoints[idx];
}

StepRecord perform_step(GrowthGraph& g, bool is_vertex_step, RandomStream& rng) {
    if (is_vertex_step) {
        const VertexId target = sample_preferential(g, rng.next_uniform());
        g.add_vertex_step(target);
        return {target, 0};
    }
    // both tips drawn against the pre-step graph
    const VertexId u = sample_preferential(g, rng.next_uniform());
    const VertexId w = sample_preferential(g, rng.next_uniform());
    g.add_edge_step(u, w);
    return {u, w};
}

TrajectoryGenerator::TrajectoryGenerator(const ModelParams& params)
    : graph_(init_graph(params)), rng_(params.seed), p_(params.p) {
    graph_.reserve(params.t_max);
}

TrajectoryGenerator::TrajectoryGenerator(GrowthGraph graph, double p,
                                         std::uint64_t seed)
    : graph_(std::move(graph)), rng_(seed), p_(p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("TrajectoryGenerator: p must lie in [0, 1]");
    }
}

StepRecord TrajectoryGenerator::step() {
    const bool vertex_step = rng_.next_uniform() < p_;
    return perform_step(graph_, vertex_step, rng_);
}

void TrajectoryGenerator::run_to(Step t) {
    while (graph_.t() < t) step();
}

Trajectory generate(const ModelParams& params) {
    TrajectoryGenerator gen(params);
    StepLog log;
    log.header = params;
    log.records.reserve(params.t_max - 1);
    while (gen.graph().t() < params.t_max) log.records.push_back(gen.step());
    return {gen.take_graph(), std::move(log)};
}

GrowthGraph generate_graph(const ModelParams& params) {
    TrajectoryGenerator gen(params);
    gen.run_to(params.t_max);
    return gen.take_graph();
}

GrowthGraph replay(const StepLog& log) {
    GrowthGraph g = init_graph(log.header);
    g.reserve(log.t());
    for (std::size_t i = 0; i < log.records.size(); ++i) {
        const StepRecord& rec = log.records[i];
        try {
            if (rec.is_vertex_step()) {
                g.add_vertex_step(rec.a);
            } else {
                g.add_edge_step(rec.a, rec.b);
            }
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("replay: record for step " +
                                        std::to_string(i + 2) +
                                        " references a vertex not yet alive");
        }
    }
    return g;
}

}  // namespace pae
