#include "pae/oracle.hpp"

#include <stdexcept>

#include "pae/clique.hpp"
#include "pae/observables.hpp"

namespace pae {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty input");
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        const std::string num(text.substr(0, slash));
        const std::string den(text.substr(slash + 1));
        if (num.empty() || den.empty()) {
            throw std::invalid_argument("parse_rational: malformed '" + std::string(text) + "'");
        }
        Rational q(mpz_class(num), mpz_class(den));
        q.canonicalize();
        return q;
    }
    const auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        const std::string whole(text.substr(0, dot));
        const std::string frac(text.substr(dot + 1));
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("parse_rational: malformed '" + std::string(text) + "'");
        }
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const bool negative = !whole.empty() && whole[0] == '-';
        mpz_class whole_z(whole.empty() || whole == "-" ? "0" : whole);
        mpz_class numerator = whole_z * scale;
        mpz_class frac_z(frac);
        numerator += negative ? -frac_z : frac_z;
        Rational q(numerator, scale);
        q.canonicalize();
        return q;
    }
    Rational q{mpz_class(std::string(text))};
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Statistic parse_statistic(std::string_view name) {
    if (name == "N") return Statistic::VertexCount;
    if (name == "d1") return Statistic::DegreeVertex1;
    if (name == "triangles") return Statistic::Triangles;
    if (name == "cherries_simple") return Statistic::CherriesSimple;
    if (name == "cherries_multi") return Statistic::CherriesMulti;
    if (name == "clique") return Statistic::CliqueNumber;
    if (name == "gamma1") return Statistic::DistinctNeighborsVertex1;
    throw std::invalid_argument(
        "unknown statistic '" + std::string(name) +
        "' (expected one of N, d1, triangles, cherries_simple, cherries_multi, "
        "clique, gamma1)");
}

std::string_view statistic_name(Statistic s) {
    switch (s) {
        case Statistic::VertexCount: return "N";
        case Statistic::DegreeVertex1: return "d1";
        case Statistic::Triangles: return "triangles";
        case Statistic::CherriesSimple: return "cherries_simple";
        case Statistic::CherriesMulti: return "cherries_multi";
        case Statistic::CliqueNumber: return "clique";
        case Statistic::DistinctNeighborsVertex1: return "gamma1";
    }
    return "?";
}

namespace {

void check_inputs(Step t, const Rational& p) {
    if (t < 1 || t > kEnumerationCap) {
        throw std::invalid_argument("oracle horizon must lie in [1, " +
                                    std::to_string(kEnumerationCap) + "], got " +
                                    std::to_string(t));
    }
    if (p < 0 || p > 1) {
        throw std::invalid_argument("oracle p must lie in [0, 1]");
    }
}

// Depth-first expansion. The graph and log are rebuilt per branch (copies
// are tiny at these horizons); branch order is canonical, so outputs are
// stable fixtures.
void expand(const GrowthGraph& g, const StepLog& log, const Rational& prob,
            Step t, const Rational& p,
            const std::function<void(const WeightedOutcome&)>& visit) {
    if (g.t() == t) {
        visit({prob, g, log});
        return;
    }
    const Step s = g.t();
    const VertexId n = g.num_vertices();
    const Rational two_s(2 * s);

    if (p > 0) {
        // vertex-step branches, one per distinct target
        for (VertexId u = 1; u <= n; ++u) {
            const Rational weight = p * Rational(g.degree(u)) / two_s;
            GrowthGraph next = g;
            next.add_vertex_step(u);
            StepLog next_log = log;
            next_log.records.push_back({u, 0});
            expand(next, next_log, prob * weight, t, p, visit);
        }
    }
    if (p < 1) {
        // edge-step branches over unordered tip pairs; (u,w) and (w,u)
        // build the same multigraph, so their weights are summed
        const Rational q = 1 - p;
        const Rational four_s2 = two_s * two_s;
        for (VertexId u = 1; u <= n; ++u) {
            for (VertexId w = u; w <= n; ++w) {
                Rational weight =
                    q * Rational(g.degree(u)) * Rational(g.degree(w)) / four_s2;
                if (u != w) weight *= 2;
                GrowthGraph next = g;
                next.add_edge_step(u, w);
                StepLog next_log = log;
                next_log.records.push_back({u, w});
                expand(next, next_log, prob * weight, t, p, visit);
            }
        }
    }
}

std::uint64_t evaluate(Statistic stat, const GrowthGraph& g) {
    switch (stat) {
        case Statistic::VertexCount:
            return g.num_vertices();
        case Statistic::DegreeVertex1:
            return g.degree(1);
        case Statistic::Triangles:
            return count_triangles(SimpleView(g));
        case Statistic::CherriesSimple:
            return cherries(g, SimpleView(g), CherryMode::Simple);
        case Statistic::CherriesMulti:
            return cherries(g, SimpleView(g), CherryMode::Multi);
        case Statistic::CliqueNumber:
            return clique_exact(SimpleView(g)).size;
        case Statistic::DistinctNeighborsVertex1:
            return SimpleView(g).distinct_neighbor_count(1);
    }
    throw std::logic_error("unhandled statistic");
}

}  // namespace

void for_each_outcome(Step t, const Rational& p,
                      const std::function<void(const WeightedOutcome&)>& visit) {
    check_inputs(t, p);
    StepLog log;
    log.header.p = p.get_d();
    log.header.t_max = t;
    expand(GrowthGraph::initial(), log, Rational(1), t, p, visit);
}

std::vector<WeightedOutcome> enumerate_outcomes(Step t, const Rational& p) {
    std::vector<WeightedOutcome> out;
    for_each_outcome(t, p, [&](const WeightedOutcome& o) { out.push_back(o); });
    return out;
}

Rational exact_expectation(Step t, const Rational& p, Statistic statistic) {
    Rational acc(0);
    for_each_outcome(t, p, [&](const WeightedOutcome& o) {
        acc += o.probability * Rational(evaluate(statistic, o.graph));
    });
    return acc;
}

Rational phi_exact(Step t, const Rational& p) {
    if (t < 1) throw std::invalid_argument("phi_exact: t must be >= 1");
    const Rational c = 1 - p / 2;
    Rational product(1);
    for (Step s = 1; s < t; ++s) {
        product *= 1 + c / Rational(s);
    }
    return product;
}

}  // namespace pae
