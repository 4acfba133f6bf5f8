#include "pae/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace pae {

double c_p(double p) { return 1.0 - p / 2.0; }

double alpha_exponent(double p) { return (1.0 - p) / (2.0 - p); }

double gamma_exponent(double p) { return 2.0 - p - 3.0 * (1.0 - p) / (2.0 - p); }

TheoryExponents theory_exponents(double p) {
    return {p,
            c_p(p),
            alpha_exponent(p),
            gamma_exponent(p),
            2.0 - p,
            3.0 * alpha_exponent(p)};
}

double phi(Step t, double p) {
    if (t < 1) throw std::invalid_argument("phi: t must be >= 1");
    const double c = c_p(p);
    double log_sum = 0.0;
    for (Step s = 1; s < t; ++s) {
        log_sum += std::log1p(c / static_cast<double>(s));
    }
    return std::exp(log_sum);
}

PhiRatioRange phi_asymptotic_check(double p, std::span<const Step> t_grid) {
    if (t_grid.empty()) {
        throw std::invalid_argument("phi_asymptotic_check: empty grid");
    }
    std::vector<Step> grid(t_grid.begin(), t_grid.end());
    std::sort(grid.begin(), grid.end());
    const double c = c_p(p);

    PhiRatioRange range{std::numeric_limits<double>::infinity(), 0.0};
    double log_phi = 0.0;
    Step s = 1;
    for (Step t : grid) {
        if (t < 1) throw std::invalid_argument("phi_asymptotic_check: t must be >= 1");
        for (; s < t; ++s) log_phi += std::log1p(c / static_cast<double>(s));
        const double ratio = std::exp(log_phi - c * std::log(static_cast<double>(t)));
        range.min_ratio = std::min(range.min_ratio, ratio);
        range.max_ratio = std::max(range.max_ratio, ratio);
    }
    return range;
}

double expected_degree_vertex1(Step t, double p) { return 2.0 * phi(t, p); }

namespace {

// golden-section refinement of a bracketed unimodal minimum
double golden_section_min(double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = gamma_exponent(x1);
    double f2 = gamma_exponent(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = gamma_exponent(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = gamma_exponent(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

double gamma_argmin_numeric() {
    // coarse grid to bracket, then golden section
    constexpr int kGridPoints = 1000;
    double best_p = 0.0;
    double best_val = gamma_exponent(0.0);
    for (int i = 1; i <= kGridPoints; ++i) {
        const double x = static_cast<double>(i) / kGridPoints;
        const double v = gamma_exponent(x);
        if (v < best_val) {
            best_val = v;
            best_p = x;
        }
    }
    const double lo = std::max(0.0, best_p - 2.0 / kGridPoints);
    const double hi = std::min(1.0, best_p + 2.0 / kGridPoints);
    return golden_section_min(lo, hi, 1e-12);
}

GammaMinimum gamma_minimizer() {
    const double p_star = 2.0 - std::sqrt(3.0);
    const double gamma_star = 2.0 * std::sqrt(3.0) - 3.0;
    // cross-check the closed form against the numeric argmin
    const double numeric = gamma_argmin_numeric();
    if (std::abs(numeric - p_star) > 1e-6 ||
        std::abs(gamma_exponent(p_star) - gamma_star) > 1e-9) {
        throw std::logic_error("gamma_minimizer: closed form and numeric argmin disagree");
    }
    return {p_star, gamma_star};
}

}  // namespace pae
