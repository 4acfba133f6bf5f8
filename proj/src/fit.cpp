#include "pae/fit.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pae/rng.hpp"
#include "pae/theory.hpp"

namespace pae {

std::optional<double> theory_exponent_for(std::string_view observable, double p) {
    if (observable == "cherries_simple" || observable == "cherries_multi") {
        return 2.0 - p;
    }
    if (observable == "triangles") return 3.0 * alpha_exponent(p);
    if (observable == "tau") return -gamma_exponent(p);  // decay, negative by convention
    if (observable == "clique_lb" || observable == "clique_exact") {
        return alpha_exponent(p);
    }
    if (observable == "max_degree") return c_p(p);
    if (observable == "gamma_t_1") return c_p(p);
    return std::nullopt;
}

namespace {

std::optional<double> extract(const ObservableRecord& rec, std::string_view name) {
    auto as_double = [](const std::optional<std::uint64_t>& v) -> std::optional<double> {
        if (!v) return std::nullopt;
        return static_cast<double>(*v);
    };
    if (name == "max_degree") return as_double(rec.max_degree);
    if (name == "cherries_simple") return as_double(rec.cherries_simple);
    if (name == "cherries_multi") return as_double(rec.cherries_multi);
    if (name == "triangles") return as_double(rec.triangles);
    if (name == "tau") return rec.tau;
    if (name == "clique_lb") return as_double(rec.clique_lb);
    if (name == "clique_exact") return as_double(rec.clique_exact);
    if (name == "gamma_t_1") return as_double(rec.gamma_t_1);
    throw FitError("fit: unknown observable '" + std::string(name) + "'");
}

struct OlsLine {
    double slope;
    double intercept;
    double r_squared;
};

OlsLine ols(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    const double r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return {slope, intercept, r2};
}

double mean_of(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

}  // namespace

ExponentFit fit_exponent(std::span<const ObservableRecord> records,
                         std::string_view observable, double p,
                         int bootstrap_resamples, std::uint64_t bootstrap_seed) {
    ExponentFit fit;
    fit.observable = std::string(observable);
    fit.p = p;
    fit.theory_exponent = theory_exponent_for(observable, p);

    // per-horizon replica values at this p
    std::map<Step, std::vector<double>> cells;
    for (const auto& rec : records) {
        if (rec.p != p) continue;
        const auto value = extract(rec, observable);
        if (!value.has_value()) {
            ++fit.undefined_dropped;
            continue;
        }
        cells[rec.t].push_back(*value);
        ++fit.n_records;
    }

    std::vector<Step> ts;
    std::vector<double> log_t, log_mean;
    for (const auto& [t, values] : cells) {
        const double mean = mean_of(values);
        if (!(mean > 0.0)) {
            fit.t_dropped.push_back(t);
            continue;
        }
        ts.push_back(t);
        log_t.push_back(std::log(static_cast<double>(t)));
        log_mean.push_back(std::log(mean));
    }
    if (ts.size() < 3) {
        throw FitError("fit: observable '" + std::string(observable) + "' at p=" +
                       std::to_string(p) + " has " + std::to_string(ts.size()) +
                       " usable grid points after dropping " +
                       std::to_string(fit.t_dropped.size()) +
                       " non-positive means; need at least 3");
    }
    fit.t_used = ts;
    fit.n_points = ts.size();

    const OlsLine line = ols(log_t, log_mean);
    fit.slope = line.slope;
    fit.intercept = line.intercept;
    fit.r_squared = line.r_squared;

    // replica bootstrap: resample each t-cell with replacement, refit
    if (bootstrap_resamples > 0) {
        RandomStream rng(mix_seed(bootstrap_seed, {cells.size(), ts.size()}));
        std::vector<double> slopes;
        slopes.reserve(bootstrap_resamples);
        std::vector<double> bx, by;
        for (int b = 0; b < bootstrap_resamples; ++b) {
            bx.clear();
            by.clear();
            for (std::size_t i = 0; i < ts.size(); ++i) {
                const auto& values = cells[ts[i]];
                double sum = 0;
                for (std::size_t k = 0; k < values.size(); ++k) {
                    const auto pick = static_cast<std::size_t>(
                        rng.next_uniform() * static_cast<double>(values.size()));
                    sum += values[std::min(pick, values.size() - 1)];
                }
                const double mean = sum / static_cast<double>(values.size());
                if (mean > 0.0) {
                    bx.push_back(log_t[i]);
                    by.push_back(std::log(mean));
                }
            }
            if (bx.size() >= 3) slopes.push_back(ols(bx, by).slope);
        }
        if (slopes.size() >= 2) {
            const double m = mean_of(slopes);
            double ss = 0;
            for (double s : slopes) ss += (s - m) * (s - m);
            fit.slope_stderr = std::sqrt(ss / static_cast<double>(slopes.size() - 1));
        }
    }
    return fit;
}

}  // namespace pae
