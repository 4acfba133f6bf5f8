#pragma once

#include <span>

#include "pae/model.hpp"

namespace pae {

// Closed-form exponents the limit theorems are stated in. All total on
// p in [0, 1] including the endpoints.
struct TheoryExponents {
    double p;
    double c_p;                // 1 - p/2: max-degree growth
    double alpha;              // (1-p)/(2-p): clique number
    double gamma;              // 2 - p - 3(1-p)/(2-p): clustering decay
    double cherry_exponent;    // 2 - p
    double triangle_exponent;  // 3 * alpha
};

double c_p(double p);
double alpha_exponent(double p);
double gamma_exponent(double p);
TheoryExponents theory_exponents(double p);

// phi(t) = prod_{s=1}^{t-1} (1 + c_p/s), phi(1) = 1. Evaluated as
// exp(sum log1p(c_p/s)) so large horizons neither overflow nor drift.
double phi(Step t, double p);

// min and max of phi(t)/t^{c_p} over a horizon grid. phi is of order
// t^{c_p}; the bound constants are unspecified, so callers assert
// boundedness, not values.
struct PhiRatioRange {
    double min_ratio;
    double max_ratio;
};

PhiRatioRange phi_asymptotic_check(double p, std::span<const Step> t_grid);

// E[d_t(1)] = 2 phi(t): vertex 1 starts with the loop, degree 2, and
// d_s(1)/phi(s) is a mean-preserving martingale.
double expected_degree_vertex1(Step t, double p);

// gamma attains its minimum at p* = 2 - sqrt(3), gamma(p*) = 2 sqrt(3) - 3.
struct GammaMinimum {
    double p_star;
    double gamma_star;
};

GammaMinimum gamma_minimizer();

// Independent numeric argmin (coarse grid + golden-section refinement),
// kept public so the closed form is checkable.
double gamma_argmin_numeric();

}  // namespace pae
