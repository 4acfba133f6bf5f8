#include "pae/model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pae {

void ModelParams::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("ModelParams: p must lie in [0, 1], got " +
                                    std::to_string(p));
    }
    if (t_max < 1 || t_max > kMaxHorizon) {
        throw std::invalid_argument("ModelParams: t_max must lie in [1, 2^31-1], got " +
                                    std::to_string(t_max));
    }
}

GrowthGraph GrowthGraph::initial() {
    GrowthGraph g;
    g.endpoints_ = {1, 1};
    g.degree_ = {0, 2};
    g.birth_step_ = {0, 1};
    return g;
}

GrowthGraph GrowthGraph::from_edge_list(
    const std::vector<std::pair<VertexId, VertexId>>& edges) {
    if (edges.empty()) {
        throw std::invalid_argument("from_edge_list: need at least one edge");
    }
    GrowthGraph g;
    g.endpoints_.reserve(2 * edges.size());
    g.degree_.push_back(0);
    g.birth_step_.push_back(0);
    Step s = 0;
    for (auto [u, w] : edges) {
        ++s;
        for (VertexId v : {u, w}) {
            if (v == 0 || v > g.num_vertices() + 1) {
                throw std::invalid_argument(
                    "from_edge_list: ids must be dense 1..N in first-use order");
            }
            if (v == g.num_vertices() + 1) {
                g.degree_.push_back(0);
                g.birth_step_.push_back(s);
            }
        }
        g.endpoints_.push_back(u);
        g.endpoints_.push_back(w);
        g.degree_[u] += 1;
        g.degree_[w] += 1;
    }
    return g;
}

std::uint32_t GrowthGraph::degree(VertexId v) const {
    if (!is_alive(v)) {
        throw std::out_of_range("GrowthGraph: unknown vertex id " + std::to_string(v));
    }
    return degree_[v];
}

Step GrowthGraph::birth_step(VertexId v) const {
    if (!is_alive(v)) {
        throw std::out_of_range("GrowthGraph: unknown vertex id " + std::to_string(v));
    }
    return birth_step_[v];
}

VertexId GrowthGraph::add_vertex_step(VertexId target) {
    if (!is_alive(target)) {
        throw std::invalid_argument("vertex-step target " + std::to_string(target) +
                                    " is not alive");
    }
    const VertexId fresh = num_vertices() + 1;
    endpoints_.push_back(target);
    endpoints_.push_back(fresh);
    degree_[target] += 1;
    degree_.push_back(1);
    birth_step_.push_back(t());
    return fresh;
}

void GrowthGraph::add_edge_step(VertexId u, VertexId w) {
    if (!is_alive(u) || !is_alive(w)) {
        throw std::invalid_argument("edge-step endpoint not alive");
    }
    endpoints_.push_back(u);
    endpoints_.push_back(w);
    degree_[u] += 1;
    degree_[w] += 1;
}

void GrowthGraph::reserve(Step t_target) {
    endpoints_.reserve(2 * t_target);
    degree_.reserve(t_target + 1);
    birth_step_.reserve(t_target + 1);
}

SimpleView::SimpleView(const GrowthGraph& g) {
    const VertexId n = g.num_vertices();
    const auto endpoints = g.endpoints();

    // multidegree counts over non-loop edges only, then CSR fill
    std::vector<std::uint64_t> counts(n + 2, 0);
    for (std::size_t e = 0; e < endpoints.size(); e += 2) {
        const VertexId u = endpoints[e];
        const VertexId w = endpoints[e + 1];
        if (u == w) continue;
        ++counts[u];
        ++counts[w];
    }
    offsets_.assign(n + 2, 0);
    for (VertexId v = 1; v <= n; ++v) offsets_[v + 1] = offsets_[v] + counts[v];
    adj_.resize(offsets_[n + 1]);

    std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end());
    for (std::size_t e = 0; e < endpoints.size(); e += 2) {
        const VertexId u = endpoints[e];
        const VertexId w = endpoints[e + 1];
        if (u == w) continue;
        adj_[cursor[u]++] = w;
        adj_[cursor[w]++] = u;
    }

    // collapse parallel edges: sort + unique per row, then compact
    std::uint64_t write = 0;
    std::uint64_t row_begin = 0;
    for (VertexId v = 1; v <= n; ++v) {
        const std::uint64_t row_end = row_begin + counts[v];
        std::sort(adj_.begin() + row_begin, adj_.begin() + row_end);
        const std::uint64_t new_begin = write;
        VertexId last = 0;
        for (std::uint64_t k = row_begin; k < row_end; ++k) {
            if (adj_[k] != last) {
                adj_[write++] = adj_[k];
                last = adj_[k];
            }
        }
        offsets_[v] = new_begin;
        row_begin = row_end;
    }
    offsets_[n + 1] = write;
    adj_.resize(write);
    adj_.shrink_to_fit();
}

std::span<const VertexId> SimpleView::neighbors(VertexId v) const {
    if (v == 0 || v > num_vertices()) {
        throw std::out_of_range("SimpleView: unknown vertex id " + std::to_string(v));
    }
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
}

std::uint64_t SimpleView::distinct_neighbor_count(VertexId v) const {
    return neighbors(v).size();
}

bool SimpleView::adjacent(VertexId u, VertexId v) const {
    auto nu = neighbors(u);
    auto nv = neighbors(v);
    const auto& shorter = nu.size() <= nv.size() ? nu : nv;
    const VertexId needle = nu.size() <= nv.size() ? v : u;
    return std::binary_search(shorter.begin(), shorter.end(), needle);
}

}  // namespace pae
