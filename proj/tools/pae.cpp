#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pae/csv.hpp"
#include "pae/experiments.hpp"
#include "pae/fit.hpp"
#include "pae/generate.hpp"
#include "pae/observables.hpp"
#include "pae/oracle.hpp"
#include "pae/snapshot.hpp"
#include "pae/theory.hpp"

namespace {

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

int cmd_generate(double p, std::uint64_t t, std::uint64_t seed,
                 const std::string& out_path) {
    const pae::ModelParams params{p, t, seed};
    params.validate();
    const pae::Trajectory traj = pae::generate(params);
    pae::write_snapshot(traj.log, out_path);
    std::cout << "wrote " << out_path << " (t=" << traj.graph.t()
              << " N=" << traj.graph.num_vertices() << ")\n";
    return 0;
}

int cmd_observe(const std::string& in_path, std::uint32_t clique_pool,
                bool exact_clique, const std::string& out_path) {
    const pae::Trajectory traj = pae::read_snapshot(in_path);
    pae::MeasureOptions opts;
    opts.clique_pool_k = clique_pool;
    opts.with_clique_exact = exact_clique;
    pae::ObservableRecord rec = pae::measure(
        traj.graph, traj.log.header.p, traj.log.header.seed, opts);

    std::string csv(pae::kObservableCsvHeader);
    csv += '\n';
    csv += pae::to_csv_row(rec);
    csv += '\n';
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        write_text(out_path, csv);
    }
    return 0;
}

int cmd_sweep(const std::string& config_path) {
    const pae::SweepConfig config = pae::parse_sweep_config(config_path);
    const pae::EnsembleResult result = pae::run_ensemble(config);
    std::cout << "cells: " << result.cells_total << " total, "
              << result.cells_skipped << " already present, "
              << result.rows_appended << " rows appended to " << config.output_csv
              << "\n";

    if (!config.output_fits.empty()) {
        std::vector<pae::ExponentFit> fits;
        static constexpr const char* kFitObservables[] = {
            "max_degree", "cherries_simple", "cherries_multi", "triangles",
            "tau",        "clique_lb",       "clique_exact",   "gamma_t_1"};
        for (double p : config.p_values) {
            for (const char* name : kFitObservables) {
                try {
                    fits.push_back(pae::fit_exponent(result.records, name, p));
                } catch (const pae::FitError&) {
                    // observable absent or too few usable points at this p
                }
            }
        }
        write_text(config.output_fits, pae::fits_to_json(fits));
        std::cout << "wrote " << config.output_fits << " (" << fits.size()
                  << " fits)\n";
    }
    if (!config.output_series_dir.empty()) {
        const auto paths =
            pae::write_series_csvs(result.records, config.output_series_dir);
        std::cout << "wrote " << paths.size() << " series files to "
                  << config.output_series_dir << "\n";
    }
    return 0;
}

int cmd_fit(const std::string& in_path, const std::string& observable, double p) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + in_path);
    const auto records = pae::read_records_csv(in);
    const pae::ExponentFit fit = pae::fit_exponent(records, observable, p);
    const pae::ExponentFit fits[] = {fit};
    std::cout << pae::fits_to_json(fits) << "\n";
    return 0;
}

int cmd_oracle(std::uint64_t t, const std::string& p_text,
               const std::string& statistic) {
    const pae::Rational p = pae::parse_rational(p_text);
    const pae::Statistic stat = pae::parse_statistic(statistic);
    const pae::Rational value = pae::exact_expectation(t, p, stat);
    std::cout << "t,p,statistic,exact_value\n";
    std::cout << t << ',' << pae::rational_to_string(p) << ','
              << pae::statistic_name(stat) << ',' << pae::rational_to_string(value)
              << "\n";
    return 0;
}

int cmd_martingale(double p, std::uint64_t t0, std::uint64_t t1,
                   std::uint32_t replicas, std::uint64_t seed, bool strawman,
                   const std::string& out_path) {
    const pae::MartingaleReport report =
        pae::martingale_diagnostic(p, t0, t1, replicas, seed, strawman);
    const pae::MartingaleReport reports[] = {report};
    const std::string json = pae::diagnostics_to_json(reports, {});
    if (out_path.empty()) {
        std::cout << json << "\n";
    } else {
        write_text(out_path, json);
        std::cout << "wrote " << out_path << "\n";
    }
    return report.strawman ? 0 : (report.vertex1.pass && report.youngest.pass ? 0 : 1);
}

int cmd_degtail(double p, std::uint32_t i, std::uint64_t t,
                std::vector<double> lambdas, std::uint32_t replicas,
                std::uint64_t seed, const std::string& out_path) {
    const pae::DegreeTailReport report =
        pae::degree_tail_diagnostic(p, i, t, lambdas, replicas, seed);
    const pae::DegreeTailReport reports[] = {report};
    const std::string json = pae::diagnostics_to_json({}, reports);
    if (out_path.empty()) {
        std::cout << json << "\n";
    } else {
        write_text(out_path, json);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

int cmd_theory(double p) {
    const pae::TheoryExponents ex = pae::theory_exponents(p);
    const pae::GammaMinimum gm = pae::gamma_minimizer();
    nlohmann::json j{{"p", ex.p},
                     {"c_p", ex.c_p},
                     {"alpha", ex.alpha},
                     {"gamma", ex.gamma},
                     {"cherry_exponent", ex.cherry_exponent},
                     {"triangle_exponent", ex.triangle_exponent},
                     {"p_star", gm.p_star},
                     {"gamma_star", gm.gamma_star}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"preferential attachment with edge-steps: simulation lab"};
    app.require_subcommand(1);

    // generate
    double g_p = 0.5;
    std::uint64_t g_t = 1000, g_seed = 0;
    std::string g_out;
    auto* generate = app.add_subcommand("generate", "generate one trajectory snapshot");
    generate->add_option("--p", g_p, "vertex-step probability")->required();
    generate->add_option("--t", g_t, "horizon (number of edges)")->required();
    generate->add_option("--seed", g_seed, "64-bit seed")->required();
    generate->add_option("--out", g_out, "snapshot path (.gz for gzip)")->required();

    // observe
    std::string o_in, o_out;
    std::uint32_t o_pool = 200;
    bool o_exact = false;
    auto* observe = app.add_subcommand("observe", "measure a snapshot, emit one CSV row");
    observe->add_option("--in", o_in, "snapshot path")->required();
    observe->add_option("--clique-pool", o_pool, "clique_greedy candidate pool size");
    observe->add_flag("--exact-clique", o_exact, "also run the exact clique solver");
    observe->add_option("--out", o_out, "output CSV (default: stdout)");

    // sweep
    std::string s_config;
    auto* sweep = app.add_subcommand("sweep", "run an ensemble sweep from a config file");
    sweep->add_option("--config", s_config, "key = value config file")->required();

    // fit
    std::string f_in, f_obs;
    double f_p = 0.5;
    auto* fit = app.add_subcommand("fit", "fit a scaling exponent from a records CSV");
    fit->add_option("--in", f_in, "records CSV")->required();
    fit->add_option("--observable", f_obs, "column to fit")->required();
    fit->add_option("--p", f_p, "p value to select")->required();

    // oracle
    std::uint64_t or_t = 2;
    std::string or_p, or_stat;
    auto* oracle = app.add_subcommand("oracle", "exact small-horizon expectation");
    oracle->add_option("--t", or_t, "horizon (<= 9)")->required();
    oracle->add_option("--p", or_p, "exact rational p, e.g. 1/2 or 0.25")->required();
    oracle
        ->add_option("--statistic", or_stat,
                     "N | d1 | triangles | cherries_simple | cherries_multi | "
                     "clique | gamma1")
        ->required();

    // martingale
    double m_p = 0.5;
    std::uint64_t m_t0 = 1, m_t1 = 1000, m_seed = 0;
    std::uint32_t m_reps = 1000;
    bool m_strawman = false;
    std::string m_out;
    auto* mart = app.add_subcommand("martingale", "two-phase martingale diagnostic");
    mart->add_option("--p", m_p, "vertex-step probability")->required();
    mart->add_option("--t0", m_t0, "freeze time")->required();
    mart->add_option("--t1", m_t1, "continuation horizon")->required();
    mart->add_option("--replicas", m_reps, "number of continuations")->required();
    mart->add_option("--seed", m_seed, "master seed");
    mart->add_flag("--strawman", m_strawman, "use the t^{c_p} straw-man normalizer");
    mart->add_option("--out", m_out, "write diagnostics JSON here");

    // degtail
    double d_p = 0.5;
    std::uint32_t d_i = 1, d_reps = 1000;
    std::uint64_t d_t = 10000, d_seed = 0;
    std::vector<double> d_lambdas;
    std::string d_out;
    auto* degtail = app.add_subcommand("degtail", "degree-tail exceedance diagnostic");
    degtail->add_option("--p", d_p, "vertex-step probability")->required();
    degtail->add_option("--i", d_i, "vertex id")->required();
    degtail->add_option("--t", d_t, "horizon")->required();
    degtail->add_option("--lambdas", d_lambdas, "ascending thresholds")
        ->required()
        ->delimiter(',');
    degtail->add_option("--replicas", d_reps, "ensemble size")->required();
    degtail->add_option("--seed", d_seed, "master seed");
    degtail->add_option("--out", d_out, "write diagnostics JSON here");

    // theory
    double t_p = 0.5;
    auto* theory = app.add_subcommand("theory", "closed-form exponents as JSON");
    theory->add_option("--p", t_p, "vertex-step probability")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return cmd_generate(g_p, g_t, g_seed, g_out);
        if (observe->parsed()) return cmd_observe(o_in, o_pool, o_exact, o_out);
        if (sweep->parsed()) return cmd_sweep(s_config);
        if (fit->parsed()) return cmd_fit(f_in, f_obs, f_p);
        if (oracle->parsed()) return cmd_oracle(or_t, or_p, or_stat);
        if (mart->parsed()) {
            return cmd_martingale(m_p, m_t0, m_t1, m_reps, m_seed, m_strawman, m_out);
        }
        if (degtail->parsed()) {
            return cmd_degtail(d_p, d_i, d_t, d_lambdas, d_reps, d_seed, d_out);
        }
        if (theory->parsed()) return cmd_theory(t_p);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
