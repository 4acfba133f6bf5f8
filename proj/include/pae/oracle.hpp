#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pae/model.hpp"

namespace pae {

// Exact arithmetic for the ground-truth engine. Probabilities are GMP
// rationals, so full enumerations sum to 1 with no tolerance at all.
using Rational = mpq_class;

// Accepts "3/4", integers, and finite decimals ("0.25" -> 1/4).
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);  // "num/den" (or "num")

inline constexpr Step kEnumerationCap = 9;

struct WeightedOutcome {
    Rational probability;
    GrowthGraph graph;
    StepLog log;
};

// Statistics exact_expectation understands, with their CLI spellings.
enum class Statistic {
    VertexCount,               // N
    DegreeVertex1,             // d1
    Triangles,                 // triangles
    CherriesSimple,            // cherries_simple
    CherriesMulti,             // cherries_multi
    CliqueNumber,              // clique
    DistinctNeighborsVertex1,  // gamma1
};

Statistic parse_statistic(std::string_view name);  // throws on unknown names
std::string_view statistic_name(Statistic s);

// Depth-first expansion of every step from G1: a vertex-step branch per
// distinct target u with weight p * d(u)/2s, an edge-step branch per
// unordered pair {u, w} with weight (1-p) * d(u)d(w)/4s^2, doubled when
// u != w (the ordered pairs (u,w) and (w,u) build the same multigraph).
// Canonical order: vertex-step branches by target id, then edge-step
// branches by (u, w) lexicographically. Throws when t exceeds the cap.
void for_each_outcome(Step t, const Rational& p,
                      const std::function<void(const WeightedOutcome&)>& visit);

// Materialized variant; mind the memory near the cap (~19M outcomes at t=9).
std::vector<WeightedOutcome> enumerate_outcomes(Step t, const Rational& p);

// Sum of probability * statistic(graph) over the full enumeration.
Rational exact_expectation(Step t, const Rational& p, Statistic statistic);

// phi(t) as an exact rational, for the law-vs-martingale identity
// E[d_t(1)] == 2 phi(t) checked without any floating point.
Rational phi_exact(Step t, const Rational& p);

}  // namespace pae
