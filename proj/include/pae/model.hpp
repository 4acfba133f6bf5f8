#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pae {

// Vertex ids are dense 1-based integers in birth order; id 0 is reserved
// as "absent" in step records. uint32 bounds every supported horizon:
// t_max <= 2^31 - 1 keeps multidegrees (<= 2t) and ids in range.
using VertexId = std::uint32_t;
using Step = std::uint64_t;

inline constexpr Step kMaxHorizon = 0x7fffffffULL;

// Full specification of one trajectory's law.
struct ModelParams {
    double p = 0.5;        // probability of a vertex-step
    Step t_max = 1;        // horizon: the final graph has t_max edges
    std::uint64_t seed = 0;

    // throws std::invalid_argument unless 0 <= p <= 1 and 1 <= t_max <= kMaxHorizon
    void validate() const;

    bool operator==(const ModelParams&) const = default;
};

// One recorded growth step. Vertex-step: `a` is the PA-chosen target, `b`
// is 0 and the new vertex id is implicit. Edge-step: `a`, `b` are the two
// independently PA-chosen tips in draw order.
struct StepRecord {
    VertexId a = 0;
    VertexId b = 0;

    bool is_vertex_step() const { return b == 0; }
    bool operator==(const StepRecord&) const = default;
};

// Replayable record of a trajectory: header plus one record per step
// s = 2..t. Replaying from G1 reconstructs the graph bit-identically.
struct StepLog {
    ModelParams header;
    std::vector<StepRecord> records;

    Step t() const { return static_cast<Step>(records.size()) + 1; }

    bool operator==(const StepLog&) const = default;
};

// The evolving multigraph. Holds the endpoint list (two entries per edge in
// insertion order), per-vertex multidegrees (a loop contributes 2) and birth
// steps. A vertex-step appends (target, new_vertex); an edge-step appends
// (u, w) in draw order. Once generation stops the object is immutable in
// use and safe for any number of concurrent readers.
class GrowthGraph {
public:
    // G1: one vertex carrying one loop.
    static GrowthGraph initial();

    // Build an arbitrary multigraph from an explicit edge list (ids must be
    // dense 1..N; birth step = step of first appearance). Intended for
    // fixtures and external edge lists, not for growing trajectories.
    static GrowthGraph from_edge_list(
        const std::vector<std::pair<VertexId, VertexId>>& edges);

    Step t() const { return static_cast<Step>(endpoints_.size()) / 2; }
    VertexId num_vertices() const {
        return static_cast<VertexId>(degree_.size() - 1);
    }
    std::uint64_t degree_sum() const { return endpoints_.size(); }

    bool is_alive(VertexId v) const { return v >= 1 && v < degree_.size(); }

    // multidegree; throws std::out_of_range on an unknown id
    std::uint32_t degree(VertexId v) const;

    // T_n: the step at which vertex v was added (T_1 = 1)
    Step birth_step(VertexId v) const;

    std::span<const VertexId> endpoints() const { return endpoints_; }

    // endpoints of edge s, s in [1, t]
    std::pair<VertexId, VertexId> edge(Step s) const {
        return {endpoints_[2 * s - 2], endpoints_[2 * s - 1]};
    }

    // Mutators used by the generator, replay and the oracle. Both check
    // that referenced ids are alive and throw std::invalid_argument.
    VertexId add_vertex_step(VertexId target);  // returns the new vertex id
    void add_edge_step(VertexId u, VertexId w);

    void reserve(Step t_target);

    bool operator==(const GrowthGraph&) const = default;

private:
    GrowthGraph() = default;

    std::vector<VertexId> endpoints_;
    std::vector<std::uint32_t> degree_;  // slot 0 unused
    std::vector<Step> birth_step_;       // slot 0 unused
};

// Simple view of a GrowthGraph: parallel edges collapsed, loops dropped.
// CSR rows are sorted and duplicate-free, so neighbor queries and the
// counting observables can binary-search and merge. Construction is one
// pass over the endpoint list plus a per-row sort.
class SimpleView {
public:
    explicit SimpleView(const GrowthGraph& g);

    VertexId num_vertices() const {
        return static_cast<VertexId>(offsets_.size() - 2);
    }

    // distinct adjacent vertices of v, ascending, v itself excluded
    std::span<const VertexId> neighbors(VertexId v) const;

    // Gamma_t(v); throws std::out_of_range on an unknown id
    std::uint64_t distinct_neighbor_count(VertexId v) const;

    bool adjacent(VertexId u, VertexId v) const;

    std::uint64_t simple_edge_count() const { return adj_.size() / 2; }

private:
    std::vector<std::uint64_t> offsets_;  // 1-based rows, size N + 2
    std::vector<VertexId> adj_;
};

}  // namespace pae
