#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pae/observables.hpp"

namespace pae {

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Least-squares slope of log(ensemble mean) on log t, against the exponent
// the theorems predict for that observable.
struct ExponentFit {
    std::string observable;
    double p = 0.0;
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double r_squared = 0.0;
    std::optional<double> theory_exponent;
    std::size_t n_points = 0;      // grid points that survived
    std::size_t n_records = 0;     // records behind them
    std::vector<Step> t_used;
    std::vector<Step> t_dropped;   // non-positive means, recorded not fitted
    std::size_t undefined_dropped = 0;  // rows whose observable was empty
};

// Observables fit_exponent accepts: max_degree, cherries_simple,
// cherries_multi, triangles, tau, clique_lb, clique_exact, gamma_t_1.
// Returns nothing for names without a theorem behind them. tau's exponent
// is negative by convention (decay).
std::optional<double> theory_exponent_for(std::string_view observable, double p);

// Filters records to the given p, means per t over replicas, drops
// non-positive means (recorded in t_dropped), then OLS on the log-log
// points. Slope stderr comes from a replica bootstrap: resample each
// t-cell with replacement, refit, take the standard deviation over
// `bootstrap_resamples` slopes (deterministic seed). Throws FitError when
// fewer than 3 grid points survive.
ExponentFit fit_exponent(std::span<const ObservableRecord> records,
                         std::string_view observable, double p,
                         int bootstrap_resamples = 200,
                         std::uint64_t bootstrap_seed = 0x0f17b001ULL);

}  // namespace pae
