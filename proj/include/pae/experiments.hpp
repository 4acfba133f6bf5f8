#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pae/fit.hpp"
#include "pae/model.hpp"
#include "pae/observables.hpp"

namespace pae {

// One sweep: every (p, t, replica) cell generates a trajectory, measures
// the requested observables at t (and at any snapshot_times below t) and
// appends rows keyed by (p, seed, t). Parsed from a flat key=value file;
// unknown keys are errors.
struct SweepConfig {
    std::vector<double> p_values;
    std::vector<Step> t_grid;            // strictly increasing
    std::uint32_t replicas = 1;
    std::uint64_t master_seed = 0;
    std::vector<std::string> observables;  // CSV column tokens; empty = default set
    std::uint32_t clique_pool_k = 200;
    std::vector<Step> snapshot_times;
    std::string output_csv;
    std::string output_fits;        // optional fits.json
    std::string output_series_dir;  // optional plot-ready per-observable CSVs
    std::uint32_t workers = 0;      // 0 = hardware concurrency

    void validate() const;  // throws std::invalid_argument
};

SweepConfig parse_sweep_config(std::istream& in);
SweepConfig parse_sweep_config(const std::string& path);

struct EnsembleResult {
    std::vector<ObservableRecord> records;  // existing + new, file order
    std::size_t cells_total = 0;
    std::size_t cells_skipped = 0;  // fully present in the output already
    std::size_t rows_appended = 0;
};

// Cells run on a worker pool (per-cell seed = mix_seed(master, {p_idx,
// t_idx, replica})); one writer appends results in canonical cell order,
// so an interrupted run leaves a prefix and a rerun reproduces the
// identical final file. Rows whose (p, seed, t) key already exists are
// never written twice.
EnsembleResult run_ensemble(const SweepConfig& config);

// Two-phase martingale check: freeze one trajectory at t0, spawn M
// continuations to t1, and test E[X_t1 - X_t0] = 0 for X_s = d_s(i)/phi(s),
// for vertex 1 and for the youngest vertex alive at t0. With
// strawman_normalizer the check runs against s^{c_p} instead of phi(s) and
// is expected to fail (that drift is what gives the diagnostic power).
struct MartingaleEntry {
    VertexId vertex = 0;
    Step born = 0;
    double x_t0 = 0.0;
    double mean_diff = 0.0;
    double stderr_diff = 0.0;
    bool pass = false;  // |mean| <= 3 stderr
};

struct MartingaleReport {
    double p = 0.0;
    Step t0 = 0;
    Step t1 = 0;
    std::uint32_t replicas = 0;
    std::uint64_t master_seed = 0;
    bool strawman = false;
    MartingaleEntry vertex1;
    MartingaleEntry youngest;
};

MartingaleReport martingale_diagnostic(double p, Step t0, Step t1,
                                       std::uint32_t replicas,
                                       std::uint64_t master_seed,
                                       bool strawman_normalizer = false);

// Empirical exceedance of the running supremum sup_s d_s(i)/phi(s) against
// thresholds lambda / i^{c_p}. Frequencies are non-increasing in lambda by
// construction; the report carries the overall log-frequency drop and a
// fitted decay rate, never asserted constants.
struct DegreeTailReport {
    double p = 0.0;
    VertexId vertex = 0;
    Step t = 0;
    std::uint32_t replicas = 0;
    std::uint64_t master_seed = 0;
    std::vector<double> lambdas;
    std::vector<std::uint64_t> exceed_counts;
    std::vector<double> frequencies;
    std::uint32_t replicas_with_vertex = 0;
    bool monotone_nonincreasing = false;
    double log_drop = 0.0;          // ln f(first) - ln f(last); +inf -> last_freq_zero
    bool last_freq_zero = false;
    std::optional<double> decay_rate;  // -slope of ln f on lambda
};

// Preconditions: lambdas ascending and every lambda > i^{-c_p}.
DegreeTailReport degree_tail_diagnostic(double p, VertexId i, Step t,
                                        std::span<const double> lambdas,
                                        std::uint32_t replicas,
                                        std::uint64_t master_seed);

// JSON emission (schemas in the README). Empty inputs produce valid
// documents with empty arrays.
std::string fits_to_json(std::span<const ExponentFit> fits);
std::string diagnostics_to_json(std::span<const MartingaleReport> martingale,
                                std::span<const DegreeTailReport> degree_tail);
std::string report_to_json(std::span<const ObservableRecord> records,
                           std::span<const ExponentFit> fits,
                           std::span<const MartingaleReport> martingale,
                           std::span<const DegreeTailReport> degree_tail);

// Plot-ready per-observable series: one CSV per (observable, p) with
// header t,mean,stderr. Returns the paths written.
std::vector<std::string> write_series_csvs(
    std::span<const ObservableRecord> records, const std::string& dir);

}  // namespace pae
