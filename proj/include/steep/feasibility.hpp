#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "steep/params.hpp"

namespace steep {

/// Echo-SNR threshold above which the secrecy rate is positive for a given
/// weight: (1 - 1/alpha2)(1 + alpha1 p1)/c1_sq. For alpha2 <= 1 the
/// eavesdropper has no phase-2 advantage and any p2 > 0 works, so 0 is
/// returned.
inline double p2_threshold_given_c1(double p1, double alpha1, double alpha2, double c1_sq) {
    if (!(p1 > 0.0) || !(alpha1 > 0.0) || !(alpha2 > 0.0))
        throw std::invalid_argument("p1, alpha1, alpha2 must be positive");
    const double c1_max = 1.0 / (1.0 + 1.0 / p1);
    if (!(c1_sq > 0.0) || !(c1_sq < c1_max))
        throw std::invalid_argument("c1_sq must lie strictly inside (0, 1/(1 + 1/p1))");
    if (alpha2 <= 1.0) return 0.0;
    return (1.0 - 1.0 / alpha2) * (1.0 + alpha1 * p1) / c1_sq;
}

/// Infimum of p2_threshold_given_c1 over all admissible weights:
/// (1 - 1/alpha2)(1 + alpha1 + alpha1 p1 + 1/p1). Any p2 above it admits a
/// weight with positive secrecy rate; no p2 at or below it does.
inline double p2_threshold_best_c1(double p1, double alpha1, double alpha2) {
    if (!(p1 > 0.0) || !(alpha1 > 0.0) || !(alpha2 > 0.0))
        throw std::invalid_argument("p1, alpha1, alpha2 must be positive");
    if (alpha2 <= 1.0) return 0.0;
    return (1.0 - 1.0 / alpha2) * (1.0 + alpha1 + alpha1 * p1 + 1.0 / p1);
}

/// n log-spaced values from lo to hi inclusive.
inline std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
    if (n == 0) throw std::invalid_argument("grid must have at least one point");
    if (!(lo > 0.0) || !(hi >= lo))
        throw std::invalid_argument("grid bounds must satisfy 0 < lo <= hi");
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    const double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(n - 1));
    return v;
}

/// Pointwise map of where a positive secrecy rate is attainable by some
/// admissible weight. Either the SNR plane with advantages fixed, or the
/// advantage plane with SNRs fixed; feasible[i][j] pairs axis1_values[i]
/// with axis2_values[j].
struct FeasibleRegionGrid {
    std::string axis1_name;
    std::string axis2_name;
    std::vector<double> axis1_values;
    std::vector<double> axis2_values;
    std::vector<std::vector<bool>> feasible;
};

/// Axis bounds for a log-spaced feasibility grid; 101 points per axis by
/// default.
struct FeasibleGridSpec {
    double axis1_lo = 0.1;
    double axis1_hi = 1e4;
    std::size_t axis1_n = 101;
    double axis2_lo = 0.1;
    double axis2_hi = 1e4;
    std::size_t axis2_n = 101;
};

/// Feasible region over (p1, p2) with (alpha1, alpha2) fixed.
inline FeasibleRegionGrid feasible_region_snr(double alpha1, double alpha2,
                                              const FeasibleGridSpec& spec) {
    if (!(alpha1 > 0.0) || !(alpha2 > 0.0))
        throw std::invalid_argument("alpha1, alpha2 must be positive");
    FeasibleRegionGrid g;
    g.axis1_name = "p1";
    g.axis2_name = "p2";
    g.axis1_values = log_spaced(spec.axis1_lo, spec.axis1_hi, spec.axis1_n);
    g.axis2_values = log_spaced(spec.axis2_lo, spec.axis2_hi, spec.axis2_n);
    g.feasible.resize(g.axis1_values.size());
    for (std::size_t i = 0; i < g.axis1_values.size(); ++i) {
        const double thr = p2_threshold_best_c1(g.axis1_values[i], alpha1, alpha2);
        g.feasible[i].resize(g.axis2_values.size());
        for (std::size_t j = 0; j < g.axis2_values.size(); ++j)
            g.feasible[i][j] = g.axis2_values[j] > thr;
    }
    return g;
}

/// Feasible region over (alpha1, alpha2) with (p1, p2) fixed.
inline FeasibleRegionGrid feasible_region_advantage(double p1, double p2,
                                                    const FeasibleGridSpec& spec) {
    if (!(p1 > 0.0) || !(p2 > 0.0)) throw std::invalid_argument("p1, p2 must be positive");
    FeasibleRegionGrid g;
    g.axis1_name = "alpha1";
    g.axis2_name = "alpha2";
    g.axis1_values = log_spaced(spec.axis1_lo, spec.axis1_hi, spec.axis1_n);
    g.axis2_values = log_spaced(spec.axis2_lo, spec.axis2_hi, spec.axis2_n);
    g.feasible.resize(g.axis1_values.size());
    for (std::size_t i = 0; i < g.axis1_values.size(); ++i) {
        g.feasible[i].resize(g.axis2_values.size());
        for (std::size_t j = 0; j < g.axis2_values.size(); ++j)
            g.feasible[i][j] = p2 > p2_threshold_best_c1(p1, g.axis1_values[i], g.axis2_values[j]);
    }
    return g;
}

}  // namespace steep
