#include "pae/clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace pae {

std::vector<VertexId> degeneracy_order(const SimpleView& view,
                                       std::vector<std::uint32_t>* core) {
    // Batagelj-Zaversnik bucket algorithm, O(N + M)
    const VertexId n = view.num_vertices();
    std::vector<std::uint32_t> deg(n + 1);
    std::uint32_t max_deg = 0;
    for (VertexId v = 1; v <= n; ++v) {
        deg[v] = static_cast<std::uint32_t>(view.distinct_neighbor_count(v));
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::uint64_t> bin(max_deg + 2, 0);
    for (VertexId v = 1; v <= n; ++v) ++bin[deg[v]];
    std::uint64_t start = 0;
    for (std::uint32_t d = 0; d <= max_deg; ++d) {
        const std::uint64_t count = bin[d];
        bin[d] = start;
        start += count;
    }
    std::vector<VertexId> vert(n);
    std::vector<std::uint64_t> pos(n + 1);
    {
        std::vector<std::uint64_t> cursor(bin.begin(), bin.end());
        for (VertexId v = 1; v <= n; ++v) {
            pos[v] = cursor[deg[v]]++;
            vert[pos[v]] = v;
        }
    }
    for (std::uint64_t i = 0; i < n; ++i) {
        const VertexId v = vert[i];
        for (VertexId u : view.neighbors(v)) {
            if (deg[u] > deg[v]) {
                // swap u with the first vertex of its bucket, then shrink it
                const std::uint64_t pu = pos[u];
                const std::uint64_t pw = bin[deg[u]];
                const VertexId w = vert[pw];
                if (u != w) {
                    std::swap(vert[pu], vert[pw]);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                ++bin[deg[u]];
                --deg[u];
            }
        }
    }
    if (core != nullptr) {
        core->assign(n + 1, 0);
        // removal degrees are non-decreasing, so deg at removal = core number
        for (VertexId v = 1; v <= n; ++v) (*core)[v] = deg[v];
    }
    return vert;
}

namespace {

using Word = std::uint64_t;

// adjacency over local ids 0..n-1, one bit row per vertex
struct LocalGraph {
    std::size_t n = 0;
    std::size_t words = 0;
    std::vector<Word> adj;

    void init(std::size_t n_) {
        n = n_;
        words = (n + 63) / 64;
        adj.assign(n * words, 0);
    }
    void add_edge(std::size_t i, std::size_t j) {
        adj[i * words + j / 64] |= Word{1} << (j % 64);
        adj[j * words + i / 64] |= Word{1} << (i % 64);
    }
    const Word* row(std::size_t i) const { return adj.data() + i * words; }
};

// Max-clique branch and bound with greedy-coloring bounds (Tomita-style
// bitset search). Candidates are consumed in reverse color order; a branch
// is cut as soon as |clique| + color can no longer beat the incumbent.
class CliqueSearch {
public:
    CliqueSearch(const LocalGraph& g, std::uint64_t budget)
        : g_(g), budget_(budget), levels_(g.n + 1) {
        for (auto& level : levels_) {
            level.p.resize(g_.words);
            level.verts.reserve(g_.n);
            level.colors.reserve(g_.n);
        }
    }

    void seed_incumbent(std::uint32_t size) { best_size_ = size; }

    // explore clique = base ∪ {expansions of P}; base is |depth| vertices
    void run(const std::vector<std::uint32_t>& base, const Word* candidates) {
        current_.assign(base.begin(), base.end());
        std::copy(candidates, candidates + g_.words, levels_[0].p.data());
        expand(0);
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t remaining_budget() const { return budget_; }
    std::uint32_t best_size() const { return best_size_; }
    const std::vector<std::uint32_t>& best_members() const { return best_members_; }

private:
    struct Level {
        std::vector<Word> p;
        std::vector<std::uint32_t> verts;
        std::vector<std::uint32_t> colors;
    };

    void record_if_better() {
        const auto size = static_cast<std::uint32_t>(current_.size());
        if (size > best_size_) {
            best_size_ = size;
            best_members_ = current_;
        }
    }

    // greedy sequential coloring of level.p into level.verts/colors,
    // grouped by ascending color class
    void color_sort(Level& level) {
        level.verts.clear();
        level.colors.clear();
        uncolored_.assign(level.p.begin(), level.p.end());
        std::uint32_t color = 0;
        while (true) {
            bool any = false;
            for (std::size_t k = 0; k < g_.words; ++k) {
                if (uncolored_[k] != 0) {
                    any = true;
                    break;
                }
            }
            if (!any) break;
            ++color;
            q_.assign(uncolored_.begin(), uncolored_.end());
            while (true) {
                std::size_t u = g_.n;
                for (std::size_t k = 0; k < g_.words; ++k) {
                    if (q_[k] != 0) {
                        u = k * 64 + static_cast<std::size_t>(std::countr_zero(q_[k]));
                        break;
                    }
                }
                if (u >= g_.n) break;
                level.verts.push_back(static_cast<std::uint32_t>(u));
                level.colors.push_back(color);
                uncolored_[u / 64] &= ~(Word{1} << (u % 64));
                q_[u / 64] &= ~(Word{1} << (u % 64));
                const Word* nu = g_.row(u);
                for (std::size_t k = 0; k < g_.words; ++k) q_[k] &= ~nu[k];
            }
        }
    }

    void expand(std::size_t depth) {
        if (exhausted_) return;
        if (budget_ == 0) {
            exhausted_ = true;
            return;
        }
        --budget_;

        Level& level = levels_[depth];
        color_sort(level);
        Level& next = levels_[depth + 1];

        for (std::size_t i = level.verts.size(); i-- > 0;) {
            if (current_.size() + level.colors[i] <= best_size_) return;
            const std::uint32_t u = level.verts[i];
            const Word* nu = g_.row(u);

            current_.push_back(u);
            bool empty = true;
            for (std::size_t k = 0; k < g_.words; ++k) {
                next.p[k] = level.p[k] & nu[k];
                empty &= next.p[k] == 0;
            }
            if (empty) {
                record_if_better();
            } else {
                expand(depth + 1);
            }
            current_.pop_back();
            if (exhausted_) return;
            level.p[u / 64] &= ~(Word{1} << (u % 64));
        }
    }

    const LocalGraph& g_;
    std::uint64_t budget_;
    bool exhausted_ = false;
    std::uint32_t best_size_ = 0;
    std::vector<std::uint32_t> current_;
    std::vector<std::uint32_t> best_members_;
    std::vector<Level> levels_;
    std::vector<Word> uncolored_;
    std::vector<Word> q_;
};

// induced LocalGraph over `members` (global ids), using view adjacency
LocalGraph induce(const SimpleView& view, const std::vector<VertexId>& members,
                  std::vector<std::int64_t>& local_of) {
    LocalGraph g;
    g.init(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) local_of[members[i]] = static_cast<std::int64_t>(i);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (VertexId w : view.neighbors(members[i])) {
            const std::int64_t j = local_of[w];
            if (j >= 0 && static_cast<std::size_t>(j) > i) {
                g.add_edge(i, static_cast<std::size_t>(j));
            }
        }
    }
    return g;
}

}  // namespace

CliqueResult clique_exact(const SimpleView& view, std::uint64_t budget) {
    const VertexId n = view.num_vertices();
    CliqueResult result;
    if (n == 0) return result;
    result.size = 1;
    result.members = {1};

    const std::vector<VertexId> order = degeneracy_order(view);
    std::vector<std::uint64_t> position(n + 1);
    for (std::uint64_t i = 0; i < n; ++i) position[order[i]] = i;

    std::vector<std::int64_t> local_of(n + 1, -1);
    std::vector<VertexId> later;
    bool exhausted = false;

    for (std::uint64_t i = 0; i < n && !exhausted; ++i) {
        const VertexId v = order[i];
        later.clear();
        for (VertexId u : view.neighbors(v)) {
            if (position[u] > i) later.push_back(u);
        }
        if (1 + later.size() <= result.size) continue;

        LocalGraph sub = induce(view, later, local_of);
        CliqueSearch search(sub, budget);
        search.seed_incumbent(result.size > 0 ? result.size - 1 : 0);
        std::vector<Word> all(sub.words, 0);
        for (std::size_t k = 0; k < later.size(); ++k) all[k / 64] |= Word{1} << (k % 64);
        search.run({}, all.data());

        if (search.best_size() + 1 > result.size) {
            result.size = search.best_size() + 1;
            result.members.clear();
            result.members.push_back(v);
            for (std::uint32_t lid : search.best_members()) {
                result.members.push_back(later[lid]);
            }
            std::sort(result.members.begin(), result.members.end());
        }
        for (VertexId u : later) local_of[u] = -1;
        budget = search.remaining_budget();
        exhausted = search.exhausted();
    }
    result.exact = !exhausted;
    return result;
}

CliqueResult clique_greedy(const GrowthGraph& g, const SimpleView& view,
                           std::uint32_t pool_k, std::uint64_t budget) {
    const VertexId n = g.num_vertices();
    CliqueResult result;
    if (n == 0 || pool_k == 0) return result;

    // pool: highest multidegrees first, ties to the earlier-born vertex
    std::vector<VertexId> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 1);
    const std::size_t k = std::min<std::size_t>(pool_k, n);
    std::partial_sort(by_degree.begin(), by_degree.begin() + k, by_degree.end(),
                      [&](VertexId a, VertexId b) {
                          const auto da = g.degree(a);
                          const auto db = g.degree(b);
                          return da != db ? da > db : a < b;
                      });
    std::vector<VertexId> pool(by_degree.begin(), by_degree.begin() + k);
    std::sort(pool.begin(), pool.end());

    std::vector<std::int64_t> local_of(n + 1, -1);
    LocalGraph sub = induce(view, pool, local_of);
    CliqueSearch search(sub, budget);
    std::vector<Word> all(sub.words, 0);
    for (std::size_t i = 0; i < pool.size(); ++i) all[i / 64] |= Word{1} << (i % 64);
    search.run({}, all.data());

    result.size = std::max<std::uint32_t>(search.best_size(), 1);
    result.exact = !search.exhausted();  // exact for the pool subgraph only
    if (search.best_members().empty()) {
        result.members = {pool.front()};
    } else {
        for (std::uint32_t lid : search.best_members()) result.members.push_back(pool[lid]);
        std::sort(result.members.begin(), result.members.end());
    }
    return result;
}

}  // namespace pae
