#pragma once

#include <cstdint>
#include <vector>

#include "pae/model.hpp"

namespace pae {

struct CliqueResult {
    std::uint32_t size = 0;
    bool exact = true;  // false when the node budget ran out first
    std::vector<VertexId> members;
};

// Smallest-last (degeneracy) ordering of the simple view. Optionally fills
// per-vertex core numbers; the graph's degeneracy is their maximum.
std::vector<VertexId> degeneracy_order(const SimpleView& view,
                                       std::vector<std::uint32_t>* core = nullptr);

inline constexpr std::uint64_t kDefaultCliqueBudget = 100'000'000;

// Exact maximum clique: branch and bound over the degeneracy ordering with
// greedy-coloring upper bounds on bitset-encoded candidate sets. Each root
// vertex only opens a subproblem over its later neighbors, so subproblem
// width is bounded by the degeneracy. Deterministic. When the budget
// (number of expansion calls) is exhausted the best clique found so far is
// returned with exact = false.
CliqueResult clique_exact(const SimpleView& view,
                          std::uint64_t budget = kDefaultCliqueBudget);

// Lower bound: restrict to the pool_k highest-multidegree vertices (ties
// broken by earlier birth) and solve that induced subgraph exactly.
// Always <= clique_exact of the whole graph.
CliqueResult clique_greedy(const GrowthGraph& g, const SimpleView& view,
                           std::uint32_t pool_k,
                           std::uint64_t budget = kDefaultCliqueBudget);

}  // namespace pae
