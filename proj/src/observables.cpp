#include "pae/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pae/clique.hpp"
#include "pae/generate.hpp"
#include "pae/theory.hpp"

namespace pae {

namespace {

inline std::uint64_t choose2(std::uint64_t n) { return n * (n - 1) / 2; }

}  // namespace

std::uint64_t distinct_neighbors(const SimpleView& view, VertexId j) {
    return view.distinct_neighbor_count(j);
}

std::uint64_t cherries(const GrowthGraph& g, const SimpleView& view,
                       CherryMode mode) {
    std::uint64_t total = 0;
    const VertexId n = g.num_vertices();
    if (mode == CherryMode::Simple) {
        for (VertexId v = 1; v <= n; ++v) {
            total += choose2(view.distinct_neighbor_count(v));
        }
    } else {
        for (VertexId v = 1; v <= n; ++v) {
            total += choose2(g.degree(v));
        }
    }
    return total;
}

std::uint64_t count_triangles(const SimpleView& view) {
    const VertexId n = view.num_vertices();

    // rank by (distinct degree, id); orient edges toward higher rank
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        const auto da = view.distinct_neighbor_count(a);
        const auto db = view.distinct_neighbor_count(b);
        return da != db ? da < db : a < b;
    });
    std::vector<std::uint32_t> rank(n + 1, 0);
    for (VertexId i = 0; i < n; ++i) rank[order[i]] = i;

    // forward adjacency, rows sorted by rank for merge intersection
    std::vector<std::uint64_t> offsets(n + 2, 0);
    for (VertexId v = 1; v <= n; ++v) {
        std::uint64_t out = 0;
        for (VertexId w : view.neighbors(v)) {
            if (rank[w] > rank[v]) ++out;
        }
        offsets[v + 1] = out;
    }
    for (VertexId v = 1; v <= n; ++v) offsets[v + 1] += offsets[v];
    std::vector<std::uint32_t> fwd(offsets[n + 1]);
    {
        std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end());
        for (VertexId v = 1; v <= n; ++v) {
            for (VertexId w : view.neighbors(v)) {
                if (rank[w] > rank[v]) fwd[cursor[v]++] = rank[w];
            }
            std::sort(fwd.begin() + offsets[v], fwd.begin() + cursor[v]);
        }
    }

    std::uint64_t total = 0;
    for (VertexId v = 1; v <= n; ++v) {
        const auto v_begin = fwd.begin() + offsets[v];
        const auto v_end = fwd.begin() + offsets[v + 1];
        for (auto it = v_begin; it != v_end; ++it) {
            const VertexId w = order[*it];
            auto a = it + 1;  // ranks above *it within v's row
            auto b = fwd.begin() + offsets[w];
            const auto b_end = fwd.begin() + offsets[w + 1];
            while (a != v_end && b != b_end) {
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    ++total;
                    ++a;
                    ++b;
                }
            }
        }
    }
    return total;
}

std::optional<double> global_clustering(std::uint64_t triangles,
                                        std::uint64_t cherries_simple) {
    if (cherries_simple == 0) return std::nullopt;
    return 3.0 * static_cast<double>(triangles) /
           static_cast<double>(cherries_simple);
}

std::optional<double> global_clustering(const GrowthGraph& g,
                                        const SimpleView& view) {
    return global_clustering(count_triangles(view),
                             cherries(g, view, CherryMode::Simple));
}

std::pair<VertexId, std::uint32_t> max_degree(const GrowthGraph& g) {
    VertexId arg = 1;
    std::uint32_t best = g.degree(1);
    const VertexId n = g.num_vertices();
    for (VertexId v = 2; v <= n; ++v) {
        if (g.degree(v) > best) {
            best = g.degree(v);
            arg = v;
        }
    }
    return {arg, best};
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> degree_histogram(
    const GrowthGraph& g) {
    std::vector<std::uint32_t> degs;
    degs.reserve(g.num_vertices());
    for (VertexId v = 1; v <= g.num_vertices(); ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end());
    std::vector<std::pair<std::uint32_t, std::uint64_t>> hist;
    for (std::size_t i = 0; i < degs.size();) {
        std::size_t j = i;
        while (j < degs.size() && degs[j] == degs[i]) ++j;
        hist.emplace_back(degs[i], j - i);
        i = j;
    }
    return hist;
}

NormalizedDegreeTrajectory normalized_degree_trajectory(const StepLog& log,
                                                        VertexId i) {
    // replay, tracking d_s(i) and the running phi product
    GrowthGraph g = GrowthGraph::initial();
    g.reserve(log.t());
    const double c = c_p(log.header.p);

    NormalizedDegreeTrajectory out;
    out.vertex = i;

    double phi_s = 1.0;  // phi(1)
    std::uint64_t deg = 0;
    bool born = false;
    auto record_point = [&](Step s) {
        const double x = static_cast<double>(deg) / phi_s;
        out.values.emplace_back(s, x);
        out.supremum = std::max(out.supremum, x);
    };

    if (i == 1) {
        born = true;
        deg = 2;
        out.birth = 1;
        record_point(1);
    }
    for (const StepRecord& rec : log.records) {
        const Step s_prev = g.t();
        phi_s *= 1.0 + c / static_cast<double>(s_prev);
        if (rec.is_vertex_step()) {
            const VertexId fresh = g.add_vertex_step(rec.a);
            if (fresh == i) {
                born = true;
                deg = 1;
                out.birth = g.t();
            } else if (born && rec.a == i) {
                ++deg;
            }
        } else {
            g.add_edge_step(rec.a, rec.b);
            if (born) {
                if (rec.a == i) ++deg;
                if (rec.b == i) ++deg;
            }
        }
        if (born) record_point(g.t());
    }
    if (!born) {
        throw std::invalid_argument("normalized_degree_trajectory: vertex " +
                                    std::to_string(i) + " is never born in the log");
    }
    return out;
}

ObservableRecord measure(const GrowthGraph& g, double p, std::uint64_t seed,
                         const MeasureOptions& options) {
    ObservableRecord rec;
    rec.p = p;
    rec.seed = seed;
    rec.t = g.t();
    rec.n_vertices = g.num_vertices();
    rec.n_edges = g.t();

    if (options.with_max_degree) rec.max_degree = max_degree(g).second;

    const bool needs_view = options.with_cherries || options.with_triangles ||
                            options.with_tau || options.with_clique_lb ||
                            options.with_clique_exact || options.with_gamma_1;
    if (!needs_view) return rec;
    const SimpleView view(g);

    if (options.with_gamma_1) rec.gamma_t_1 = view.distinct_neighbor_count(1);
    if (options.with_cherries || options.with_tau) {
        rec.cherries_simple = cherries(g, view, CherryMode::Simple);
        rec.cherries_multi = cherries(g, view, CherryMode::Multi);
    }
    if (options.with_triangles || options.with_tau) {
        rec.triangles = count_triangles(view);
    }
    if (options.with_tau) {
        rec.tau = global_clustering(*rec.triangles, *rec.cherries_simple);
    }
    if (options.with_clique_lb) {
        rec.clique_lb =
            clique_greedy(g, view, options.clique_pool_k, options.clique_budget).size;
    }
    if (options.with_clique_exact) {
        const CliqueResult res = clique_exact(view, options.clique_budget);
        if (res.exact) {
            rec.clique_exact = res.size;
        } else {
            // budget ran out: the size is only a lower bound, report it there
            if (!rec.clique_lb || *rec.clique_lb < res.size) rec.clique_lb = res.size;
        }
    }
    return rec;
}

}  // namespace pae
