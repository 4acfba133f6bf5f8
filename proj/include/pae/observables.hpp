#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pae/model.hpp"

namespace pae {

// One row of measurements for one trajectory at one time. Empty optionals
// serialize as empty CSV fields (undefined or not computed).
struct ObservableRecord {
    double p = 0.0;
    std::uint64_t seed = 0;
    Step t = 0;
    std::uint64_t n_vertices = 0;
    std::uint64_t n_edges = 0;
    std::optional<std::uint64_t> max_degree;
    std::optional<std::uint64_t> cherries_simple;
    std::optional<std::uint64_t> cherries_multi;
    std::optional<std::uint64_t> triangles;
    std::optional<double> tau;  // empty when cherries_simple == 0
    std::optional<std::uint64_t> clique_lb;
    std::optional<std::uint64_t> clique_exact;
    std::optional<std::uint64_t> gamma_t_1;  // distinct neighbors of vertex 1
    std::optional<std::uint64_t> wall_millis;

    bool operator==(const ObservableRecord&) const = default;
};

// Gamma_t(j): loops and multiplicities excluded.
std::uint64_t distinct_neighbors(const SimpleView& view, VertexId j);

enum class CherryMode { Simple, Multi };

// Simple: sum over v of C(Gamma(v), 2) — paths of length 2 with three
// distinct vertices. Multi: sum over v of C(degree(v), 2) with the
// loop-inflated multidegrees.
std::uint64_t cherries(const GrowthGraph& g, const SimpleView& view,
                       CherryMode mode);

// Triangles of the simple view, each counted once. Degree-ordered
// orientation + sorted-list intersection, o(N^2) on these sparse graphs.
std::uint64_t count_triangles(const SimpleView& view);

// tau = 3 * triangles / cherries_simple; empty when there are no cherries.
std::optional<double> global_clustering(std::uint64_t triangles,
                                        std::uint64_t cherries_simple);
std::optional<double> global_clustering(const GrowthGraph& g,
                                        const SimpleView& view);

// (argmax vertex, multidegree); earliest vertex wins ties.
std::pair<VertexId, std::uint32_t> max_degree(const GrowthGraph& g);

// (multidegree, count) pairs, ascending by degree; counts sum to N(t).
std::vector<std::pair<std::uint32_t, std::uint64_t>> degree_histogram(
    const GrowthGraph& g);

// X_s = d_s(i) / phi(s) for s = birth_step(i)..t, plus its running
// supremum. Exact replay of the log; throws std::invalid_argument when the
// vertex is never born in it.
struct NormalizedDegreeTrajectory {
    VertexId vertex = 0;
    Step birth = 0;
    std::vector<std::pair<Step, double>> values;
    double supremum = 0.0;
};

NormalizedDegreeTrajectory normalized_degree_trajectory(const StepLog& log,
                                                        VertexId i);

// Which measurements to run and with what clique knobs.
struct MeasureOptions {
    bool with_max_degree = true;
    bool with_cherries = true;
    bool with_triangles = true;
    bool with_tau = true;
    bool with_clique_lb = true;
    bool with_clique_exact = false;
    bool with_gamma_1 = true;
    std::uint32_t clique_pool_k = 200;
    std::uint64_t clique_budget = 100'000'000;
};

// Assembles a record from one (immutable) graph. Builds the simple view
// once; wall_millis is left to the caller.
ObservableRecord measure(const GrowthGraph& g, double p, std::uint64_t seed,
                         const MeasureOptions& options = {});

}  // namespace pae
