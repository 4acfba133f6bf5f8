#include "pae/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "pae/csv.hpp"
#include "pae/generate.hpp"
#include "pae/rng.hpp"
#include "pae/theory.hpp"

namespace pae {

namespace {

using Json = nlohmann::json;
using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ms(Clock::time_point since) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - since)
            .count());
}

std::uint32_t pool_width(std::uint32_t requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// index-sharded parallel loop; first worker exception rethrown on the caller
void parallel_for(std::size_t n, std::uint32_t workers,
                  const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    if (workers <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto body = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const std::uint32_t spawn = std::min<std::uint32_t>(workers, static_cast<std::uint32_t>(n));
    pool.reserve(spawn);
    for (std::uint32_t w = 0; w < spawn; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

void SweepConfig::validate() const {
    if (p_values.empty()) throw std::invalid_argument("sweep: p_values is empty");
    for (double p : p_values) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("sweep: p value outside [0,1]");
        }
    }
    if (t_grid.empty()) throw std::invalid_argument("sweep: t_grid is empty");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (t_grid[i] < 1 || t_grid[i] > kMaxHorizon) {
            throw std::invalid_argument("sweep: t_grid entry out of range");
        }
        if (i > 0 && t_grid[i] <= t_grid[i - 1]) {
            throw std::invalid_argument("sweep: t_grid must be strictly increasing");
        }
    }
    if (replicas < 1) throw std::invalid_argument("sweep: replicas must be >= 1");
    if (output_csv.empty()) throw std::invalid_argument("sweep: output_csv is required");
    for (Step s : snapshot_times) {
        if (s < 1) throw std::invalid_argument("sweep: snapshot time must be >= 1");
    }
}

namespace {

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::string current;
    for (char ch : value) {
        if (ch == ',' || ch == ' ' || ch == '\t') {
            if (!current.empty()) items.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) items.push_back(std::move(current));
    return items;
}

template <typename T>
T parse_value(const std::string& token, const std::string& key);

template <>
double parse_value<double>(const std::string& token, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("sweep config: bad value '" + token + "' for " + key);
    }
}

template <>
std::uint64_t parse_value<std::uint64_t>(const std::string& token, const std::string& key) {
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("sweep config: bad value '" + token + "' for " + key);
    }
}

template <>
std::uint32_t parse_value<std::uint32_t>(const std::string& token, const std::string& key) {
    const std::uint64_t v = parse_value<std::uint64_t>(token, key);
    if (v > 0xffffffffULL) {
        throw std::invalid_argument("sweep config: value too large for " + key);
    }
    return static_cast<std::uint32_t>(v);
}

}  // namespace

SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig config;
    std::set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("sweep config line " + std::to_string(line_no) +
                                        ": expected key = value");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second) {
            throw std::invalid_argument("sweep config line " + std::to_string(line_no) +
                                        ": duplicate key '" + key + "'");
        }

        if (key == "p_values") {
            for (const auto& tok : split_list(value)) {
                config.p_values.push_back(parse_value<double>(tok, key));
            }
        } else if (key == "t_grid") {
            for (const auto& tok : split_list(value)) {
                config.t_grid.push_back(parse_value<std::uint64_t>(tok, key));
            }
        } else if (key == "replicas") {
            config.replicas = parse_value<std::uint32_t>(value, key);
        } else if (key == "master_seed") {
            config.master_seed = parse_value<std::uint64_t>(value, key);
        } else if (key == "observables") {
            config.observables = split_list(value);
        } else if (key == "clique_pool_k") {
            config.clique_pool_k = parse_value<std::uint32_t>(value, key);
        } else if (key == "snapshot_times") {
            for (const auto& tok : split_list(value)) {
                config.snapshot_times.push_back(parse_value<std::uint64_t>(tok, key));
            }
        } else if (key == "output_csv") {
            config.output_csv = value;
        } else if (key == "output_fits") {
            config.output_fits = value;
        } else if (key == "output_series_dir") {
            config.output_series_dir = value;
        } else if (key == "workers") {
            config.workers = parse_value<std::uint32_t>(value, key);
        } else {
            throw std::invalid_argument("sweep config line " + std::to_string(line_no) +
                                        ": unknown key '" + key + "'");
        }
    }
    config.validate();
    return config;
}

SweepConfig parse_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open sweep config " + path);
    return parse_sweep_config(in);
}

namespace {

MeasureOptions options_from_tokens(const std::vector<std::string>& tokens,
                                   std::uint32_t clique_pool_k) {
    MeasureOptions opts;
    opts.clique_pool_k = clique_pool_k;
    if (tokens.empty()) return opts;  // default set
    opts.with_max_degree = false;
    opts.with_cherries = false;
    opts.with_triangles = false;
    opts.with_tau = false;
    opts.with_clique_lb = false;
    opts.with_clique_exact = false;
    opts.with_gamma_1 = false;
    for (const auto& tok : tokens) {
        if (tok == "max_degree") {
            opts.with_max_degree = true;
        } else if (tok == "cherries") {
            opts.with_cherries = true;
        } else if (tok == "triangles") {
            opts.with_triangles = true;
        } else if (tok == "tau") {
            opts.with_tau = true;
        } else if (tok == "clique_lb") {
            opts.with_clique_lb = true;
        } else if (tok == "clique_exact") {
            opts.with_clique_exact = true;
        } else if (tok == "gamma_t_1") {
            opts.with_gamma_1 = true;
        } else {
            throw std::invalid_argument("sweep: unknown observable token '" + tok +
                                        "' (expected max_degree, cherries, triangles, "
                                        "tau, clique_lb, clique_exact, gamma_t_1)");
        }
    }
    return opts;
}

using RowKey = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;  // p bits, seed, t

RowKey key_of(double p, std::uint64_t seed, Step t) {
    return {std::bit_cast<std::uint64_t>(p), seed, t};
}

struct CellWork {
    double p = 0.0;
    Step t = 0;
    std::uint64_t seed = 0;
    std::vector<Step> measure_at;  // ascending; the final horizon included last
};

std::vector<ObservableRecord> run_cell(const CellWork& cell,
                                       const MeasureOptions& opts,
                                       const std::set<RowKey>& existing) {
    const auto started = Clock::now();
    TrajectoryGenerator gen(ModelParams{cell.p, cell.t, cell.seed});
    std::vector<ObservableRecord> rows;
    for (Step at : cell.measure_at) {
        gen.run_to(at);
        if (existing.contains(key_of(cell.p, cell.seed, at))) continue;
        ObservableRecord rec = measure(gen.graph(), cell.p, cell.seed, opts);
        rec.wall_millis = elapsed_ms(started);
        rows.push_back(std::move(rec));
    }
    return rows;
}

}  // namespace

EnsembleResult run_ensemble(const SweepConfig& config) {
    config.validate();
    const MeasureOptions opts =
        options_from_tokens(config.observables, config.clique_pool_k);

    EnsembleResult result;
    result.records = read_records_csv_if_exists(config.output_csv);
    std::set<RowKey> existing;
    for (const auto& rec : result.records) {
        existing.insert(key_of(rec.p, rec.seed, rec.t));
    }

    std::vector<Step> snapshots(config.snapshot_times);
    std::sort(snapshots.begin(), snapshots.end());
    snapshots.erase(std::unique(snapshots.begin(), snapshots.end()), snapshots.end());

    // canonical cell order: p index, then t index, then replica
    std::vector<CellWork> pending;
    for (std::size_t pi = 0; pi < config.p_values.size(); ++pi) {
        for (std::size_t ti = 0; ti < config.t_grid.size(); ++ti) {
            const Step t = config.t_grid[ti];
            for (std::uint32_t rep = 0; rep < config.replicas; ++rep) {
                ++result.cells_total;
                CellWork cell;
                cell.p = config.p_values[pi];
                cell.t = t;
                cell.seed = mix_seed(config.master_seed, {pi, ti, rep});
                for (Step snap : snapshots) {
                    if (snap >= 1 && snap < t) cell.measure_at.push_back(snap);
                }
                cell.measure_at.push_back(t);
                bool complete = true;
                for (Step at : cell.measure_at) {
                    if (!existing.contains(key_of(cell.p, cell.seed, at))) {
                        complete = false;
                        break;
                    }
                }
                if (complete) {
                    ++result.cells_skipped;
                } else {
                    pending.push_back(std::move(cell));
                }
            }
        }
    }
    if (pending.empty()) return result;

    const bool fresh_file = !std::filesystem::exists(config.output_csv);
    std::ofstream out(config.output_csv, std::ios::binary | std::ios::app);
    if (!out) {
        throw std::runtime_error("cannot open " + config.output_csv + " for append");
    }
    if (fresh_file) out << kObservableCsvHeader << '\n';

    // workers fill `finished`; rows land in the file in canonical cell
    // order, so any interrupted run leaves a clean resumable prefix
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::condition_variable cv;
    std::map<std::size_t, std::vector<ObservableRecord>> finished;
    std::exception_ptr worker_error;

    auto body = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= pending.size()) return;
            std::vector<ObservableRecord> rows;
            bool bail;
            {
                std::lock_guard lock(mu);
                bail = static_cast<bool>(worker_error);
            }
            if (!bail) {
                try {
                    rows = run_cell(pending[i], opts, existing);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!worker_error) worker_error = std::current_exception();
                    rows.clear();
                }
            }
            {
                std::lock_guard lock(mu);
                finished.emplace(i, std::move(rows));
            }
            cv.notify_all();
        }
    };
    const std::uint32_t width = std::min<std::uint32_t>(
        pool_width(config.workers), static_cast<std::uint32_t>(pending.size()));
    std::vector<std::thread> pool;
    pool.reserve(width);
    for (std::uint32_t w = 0; w < width; ++w) pool.emplace_back(body);

    for (std::size_t write_next = 0; write_next < pending.size(); ++write_next) {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return finished.contains(write_next); });
        auto rows = std::move(finished[write_next]);
        finished.erase(write_next);
        lock.unlock();
        for (auto& row : rows) {
            out << to_csv_row(row) << '\n';
            result.records.push_back(std::move(row));
            ++result.rows_appended;
        }
        out.flush();
    }
    for (auto& th : pool) th.join();
    if (worker_error) std::rethrow_exception(worker_error);
    if (!out) throw std::runtime_error("write failed: " + config.output_csv);
    return result;
}

MartingaleReport martingale_diagnostic(double p, Step t0, Step t1,
                                       std::uint32_t replicas,
                                       std::uint64_t master_seed,
                                       bool strawman_normalizer) {
    if (t0 < 1 || t0 >= t1) {
        throw std::invalid_argument("martingale_diagnostic: need 1 <= t0 < t1");
    }
    if (replicas < 2) {
        throw std::invalid_argument("martingale_diagnostic: need at least 2 replicas");
    }

    MartingaleReport report;
    report.p = p;
    report.t0 = t0;
    report.t1 = t1;
    report.replicas = replicas;
    report.master_seed = master_seed;
    report.strawman = strawman_normalizer;

    // phase 1: freeze one trajectory at t0
    const GrowthGraph base =
        generate_graph(ModelParams{p, t0, mix_seed(master_seed, {0})});
    const VertexId youngest = base.num_vertices();

    const double c = c_p(p);
    auto normalizer = [&](Step s) {
        return strawman_normalizer ? std::pow(static_cast<double>(s), c) : phi(s, p);
    };
    const double norm_t0 = normalizer(t0);
    const double norm_t1 = normalizer(t1);

    const VertexId targets[2] = {1, youngest};
    const double x_t0[2] = {base.degree(1) / norm_t0, base.degree(youngest) / norm_t0};

    // phase 2: M independent continuations of the frozen graph
    std::vector<double> diff0(replicas), diff1(replicas);
    parallel_for(replicas, pool_width(0), [&](std::size_t r) {
        TrajectoryGenerator gen(base, p, mix_seed(master_seed, {1, r}));
        gen.run_to(t1);
        diff0[r] = gen.graph().degree(targets[0]) / norm_t1 - x_t0[0];
        diff1[r] = gen.graph().degree(targets[1]) / norm_t1 - x_t0[1];
    });

    auto summarize = [&](VertexId v, double x0, const std::vector<double>& diffs) {
        MartingaleEntry entry;
        entry.vertex = v;
        entry.born = base.birth_step(v);
        entry.x_t0 = x0;
        double sum = 0;
        for (double d : diffs) sum += d;
        entry.mean_diff = sum / static_cast<double>(replicas);
        double ss = 0;
        for (double d : diffs) ss += (d - entry.mean_diff) * (d - entry.mean_diff);
        const double sd = std::sqrt(ss / static_cast<double>(replicas - 1));
        entry.stderr_diff = sd / std::sqrt(static_cast<double>(replicas));
        // absolute epsilon keeps zero-variance degenerate runs (p = 0) from
        // tripping on the phi evaluation's last bits
        entry.pass = std::abs(entry.mean_diff) <= 3.0 * entry.stderr_diff + 1e-12;
        return entry;
    };
    report.vertex1 = summarize(targets[0], x_t0[0], diff0);
    report.youngest = summarize(targets[1], x_t0[1], diff1);
    return report;
}

DegreeTailReport degree_tail_diagnostic(double p, VertexId i, Step t,
                                        std::span<const double> lambdas,
                                        std::uint32_t replicas,
                                        std::uint64_t master_seed) {
    if (lambdas.empty()) {
        throw std::invalid_argument("degree_tail_diagnostic: empty lambda grid");
    }
    if (i < 1) throw std::invalid_argument("degree_tail_diagnostic: vertex id >= 1");
    if (replicas < 1) throw std::invalid_argument("degree_tail_diagnostic: replicas >= 1");
    const double c = c_p(p);
    const double i_pow = std::pow(static_cast<double>(i), c);
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        if (k > 0 && lambdas[k] <= lambdas[k - 1]) {
            throw std::invalid_argument("degree_tail_diagnostic: lambdas must ascend");
        }
        // theorem hypothesis: lambda > i^{-c_p}
        if (!(lambdas[k] > 1.0 / i_pow)) {
            throw std::invalid_argument(
                "degree_tail_diagnostic: lambda must exceed i^{-c_p}");
        }
    }

    DegreeTailReport report;
    report.p = p;
    report.vertex = i;
    report.t = t;
    report.replicas = replicas;
    report.master_seed = master_seed;
    report.lambdas.assign(lambdas.begin(), lambdas.end());

    // running supremum of d_s(i)/phi(s) per replica; -1 marks "never born"
    std::vector<double> sups(replicas, -1.0);
    parallel_for(replicas, pool_width(0), [&](std::size_t r) {
        TrajectoryGenerator gen(ModelParams{p, t, mix_seed(master_seed, {r})});
        double phi_s = 1.0;
        double sup = i == 1 ? 2.0 : -1.0;
        while (gen.graph().t() < t) {
            const auto s_prev = static_cast<double>(gen.graph().t());
            gen.step();
            phi_s *= 1.0 + c / s_prev;
            if (gen.graph().is_alive(i)) {
                const double x = gen.graph().degree(i) / phi_s;
                if (x > sup) sup = x;
            }
        }
        sups[r] = sup;
    });

    report.exceed_counts.assign(lambdas.size(), 0);
    for (double sup : sups) {
        if (sup < 0) continue;
        ++report.replicas_with_vertex;
        for (std::size_t k = 0; k < lambdas.size(); ++k) {
            if (sup > lambdas[k] / i_pow) ++report.exceed_counts[k];
        }
    }
    if (report.replicas_with_vertex == 0) {
        throw std::runtime_error("degree_tail_diagnostic: vertex never born in any replica");
    }
    report.frequencies.resize(lambdas.size());
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        report.frequencies[k] = static_cast<double>(report.exceed_counts[k]) /
                                static_cast<double>(report.replicas_with_vertex);
    }
    report.monotone_nonincreasing = true;
    for (std::size_t k = 1; k < lambdas.size(); ++k) {
        if (report.frequencies[k] > report.frequencies[k - 1]) {
            report.monotone_nonincreasing = false;
        }
    }

    const double f_first = report.frequencies.front();
    double f_last = report.frequencies.back();
    report.last_freq_zero = f_last == 0.0;
    if (report.last_freq_zero) {
        // floor at half an observation so the drop stays finite
        f_last = 0.5 / static_cast<double>(report.replicas_with_vertex);
    }
    report.log_drop = f_first > 0.0 ? std::log(f_first) - std::log(f_last) : 0.0;

    // decay rate: OLS of ln f on lambda over strictly positive frequencies
    std::vector<double> xs, ys;
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        if (report.frequencies[k] > 0.0) {
            xs.push_back(lambdas[k]);
            ys.push_back(std::log(report.frequencies[k]));
        }
    }
    if (xs.size() >= 2) {
        double mx = 0, my = 0;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            mx += xs[k];
            my += ys[k];
        }
        mx /= static_cast<double>(xs.size());
        my /= static_cast<double>(xs.size());
        double sxx = 0, sxy = 0;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            sxx += (xs[k] - mx) * (xs[k] - mx);
            sxy += (xs[k] - mx) * (ys[k] - my);
        }
        if (sxx > 0) report.decay_rate = -sxy / sxx;
    }
    return report;
}

namespace {

Json fit_to_json(const ExponentFit& fit) {
    Json j{{"observable", fit.observable},
           {"p", fit.p},
           {"slope", fit.slope},
           {"intercept", fit.intercept},
           {"slope_stderr", fit.slope_stderr},
           {"r_squared", fit.r_squared},
           {"n_points", fit.n_points},
           {"n_records", fit.n_records},
           {"t_used", fit.t_used},
           {"t_dropped", fit.t_dropped},
           {"undefined_dropped", fit.undefined_dropped}};
    if (fit.theory_exponent) {
        j["theory_exponent"] = *fit.theory_exponent;
    } else {
        j["theory_exponent"] = nullptr;
    }
    return j;
}

Json martingale_to_json(const MartingaleReport& rep) {
    auto entry = [](const MartingaleEntry& e) {
        return Json{{"vertex", e.vertex},     {"born", e.born},
                    {"x_t0", e.x_t0},         {"mean_diff", e.mean_diff},
                    {"stderr", e.stderr_diff}, {"pass", e.pass}};
    };
    return Json{{"p", rep.p},
                {"t0", rep.t0},
                {"t1", rep.t1},
                {"replicas", rep.replicas},
                {"master_seed", rep.master_seed},
                {"strawman_normalizer", rep.strawman},
                {"vertex1", entry(rep.vertex1)},
                {"youngest", entry(rep.youngest)}};
}

Json degtail_to_json(const DegreeTailReport& rep) {
    Json j{{"p", rep.p},
           {"vertex", rep.vertex},
           {"t", rep.t},
           {"replicas", rep.replicas},
           {"master_seed", rep.master_seed},
           {"lambdas", rep.lambdas},
           {"exceed_counts", rep.exceed_counts},
           {"frequencies", rep.frequencies},
           {"replicas_with_vertex", rep.replicas_with_vertex},
           {"monotone_nonincreasing", rep.monotone_nonincreasing},
           {"log_drop", rep.log_drop},
           {"last_freq_zero", rep.last_freq_zero}};
    if (rep.decay_rate) {
        j["decay_rate"] = *rep.decay_rate;
    } else {
        j["decay_rate"] = nullptr;
    }
    return j;
}

}  // namespace

std::string fits_to_json(std::span<const ExponentFit> fits) {
    Json j{{"fits", Json::array()}};
    for (const auto& fit : fits) j["fits"].push_back(fit_to_json(fit));
    return j.dump(2);
}

std::string diagnostics_to_json(std::span<const MartingaleReport> martingale,
                                std::span<const DegreeTailReport> degree_tail) {
    Json j{{"martingale", Json::array()}, {"degree_tail", Json::array()}};
    for (const auto& rep : martingale) j["martingale"].push_back(martingale_to_json(rep));
    for (const auto& rep : degree_tail) j["degree_tail"].push_back(degtail_to_json(rep));
    return j.dump(2);
}

std::string report_to_json(std::span<const ObservableRecord> records,
                           std::span<const ExponentFit> fits,
                           std::span<const MartingaleReport> martingale,
                           std::span<const DegreeTailReport> degree_tail) {
    std::set<double> ps;
    std::set<Step> ts;
    std::size_t undefined_tau = 0;
    for (const auto& rec : records) {
        ps.insert(rec.p);
        ts.insert(rec.t);
        if (rec.cherries_simple && *rec.cherries_simple == 0) ++undefined_tau;
    }
    Json j;
    j["records"] = {{"count", records.size()},
                    {"p_values", std::vector<double>(ps.begin(), ps.end())},
                    {"t_values", std::vector<Step>(ts.begin(), ts.end())},
                    {"undefined_tau_cells", undefined_tau}};
    j["fits"] = Json::array();
    for (const auto& fit : fits) j["fits"].push_back(fit_to_json(fit));
    j["martingale"] = Json::array();
    for (const auto& rep : martingale) j["martingale"].push_back(martingale_to_json(rep));
    j["degree_tail"] = Json::array();
    for (const auto& rep : degree_tail) j["degree_tail"].push_back(degtail_to_json(rep));
    return j.dump(2);
}

std::vector<std::string> write_series_csvs(
    std::span<const ObservableRecord> records, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);

    static constexpr const char* kSeriesObservables[] = {
        "max_degree", "cherries_simple", "cherries_multi", "triangles",
        "tau",        "clique_lb",       "clique_exact",   "gamma_t_1"};

    auto extract = [](const ObservableRecord& rec,
                      std::string_view name) -> std::optional<double> {
        if (name == "max_degree" && rec.max_degree) return static_cast<double>(*rec.max_degree);
        if (name == "cherries_simple" && rec.cherries_simple) {
            return static_cast<double>(*rec.cherries_simple);
        }
        if (name == "cherries_multi" && rec.cherries_multi) {
            return static_cast<double>(*rec.cherries_multi);
        }
        if (name == "triangles" && rec.triangles) return static_cast<double>(*rec.triangles);
        if (name == "tau") return rec.tau;
        if (name == "clique_lb" && rec.clique_lb) return static_cast<double>(*rec.clique_lb);
        if (name == "clique_exact" && rec.clique_exact) {
            return static_cast<double>(*rec.clique_exact);
        }
        if (name == "gamma_t_1" && rec.gamma_t_1) return static_cast<double>(*rec.gamma_t_1);
        return std::nullopt;
    };

    std::vector<std::string> written;
    for (const char* name : kSeriesObservables) {
        // (p, t) -> values
        std::map<double, std::map<Step, std::vector<double>>> series;
        for (const auto& rec : records) {
            const auto v = extract(rec, name);
            if (v) series[rec.p][rec.t].push_back(*v);
        }
        for (const auto& [p, by_t] : series) {
            const std::string path =
                (fs::path(dir) / ("series_" + std::string(name) + "_p" +
                                  format_double(p) + ".csv"))
                    .string();
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open " + path + " for writing");
            out << "t,mean,stderr\n";
            for (const auto& [t, values] : by_t) {
                double sum = 0;
                for (double v : values) sum += v;
                const double mean = sum / static_cast<double>(values.size());
                double stderr_mean = 0;
                if (values.size() > 1) {
                    double ss = 0;
                    for (double v : values) ss += (v - mean) * (v - mean);
                    stderr_mean = std::sqrt(ss / static_cast<double>(values.size() - 1)) /
                                  std::sqrt(static_cast<double>(values.size()));
                }
                out << t << ',' << format_double(mean) << ','
                    << format_double(stderr_mean) << '\n';
            }
            written.push_back(path);
        }
    }
    return written;
}

}  // namespace pae
