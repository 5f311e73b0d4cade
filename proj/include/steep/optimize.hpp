#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "steep/params.hpp"
#include "steep/secrecy.hpp"
#include "steep/units.hpp"

namespace steep {

namespace detail {

/// Golden-section maximization on [a, b]; assumes the global bracket was
/// already located by a grid pass. Returns the argmax to within xtol.
template <typename F>
double golden_max(F&& f, double a, double b, double xtol) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

/// Coarse grid over [lo, hi] followed by golden-section refinement on the
/// winning bracket. The grid doubles as a multimodality net: whatever basin
/// holds the global grid maximum is the one refined.
template <typename F>
double grid_then_golden_max(F&& f, double lo, double hi, std::size_t n_grid, double xtol) {
    std::size_t best_i = 0;
    double best_v = -std::numeric_limits<double>::infinity();
    std::vector<double> xs(n_grid);
    for (std::size_t i = 0; i < n_grid; ++i) {
        xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n_grid - 1);
        const double v = f(xs[i]);
        if (v > best_v) {
            best_v = v;
            best_i = i;
        }
    }
    const double a = xs[best_i == 0 ? 0 : best_i - 1];
    const double b = xs[std::min(best_i + 1, n_grid - 1)];
    if (b - a <= xtol) return xs[best_i];
    return golden_max(f, a, b, xtol);
}

inline constexpr std::size_t kCoarseGridPoints = 256;
inline constexpr double kC1AbsTol = 1e-8;    // refinement target, below the 1e-6 contract
inline constexpr double kP1DbTol = 1e-4;     // dB resolution of the outer search
inline constexpr double kBoundaryInset = 1e-9;

}  // namespace detail

/// A located maximum of the secrecy rate. rs_star is unclamped so infeasible
/// configurations report how negative their best is; report is the full
/// evaluation at (p1_star, c1_sq_star).
struct OptimumPoint {
    double rs_star;
    double p1_star;     ///< linear SNR; equals the input p1 when only c1 was searched
    double c1_sq_star;  ///< strictly inside (0, 1/(1 + 1/p1_star))
    SecrecyReport report;
};

/// Maximize the secrecy rate over the admissible squared weight at fixed
/// SNRs and advantages.
inline OptimumPoint optimize_c1(double p1, double p2, double alpha1, double alpha2) {
    if (!(p1 > 0.0) || !(p2 > 0.0) || !(alpha1 > 0.0) || !(alpha2 > 0.0))
        throw std::invalid_argument("p1, p2, alpha1, alpha2 must be positive");
    const double c_max = 1.0 / (1.0 + 1.0 / p1);
    const double lo = c_max * detail::kBoundaryInset;
    const double hi = c_max * (1.0 - detail::kBoundaryInset);
    auto rate_at = [&](double c) { return secrecy_rate(SystemParams{p1, p2, alpha1, alpha2, c}); };
    const double c_star =
        detail::grid_then_golden_max(rate_at, lo, hi, detail::kCoarseGridPoints, detail::kC1AbsTol);
    OptimumPoint opt{};
    opt.p1_star = p1;
    opt.c1_sq_star = c_star;
    opt.report = secrecy_report(SystemParams{p1, p2, alpha1, alpha2, c_star});
    opt.rs_star = opt.report.rs;
    return opt;
}

/// Probe-power search window for the joint optimization, in dB.
struct P1Window {
    double lo_db = -10.0;
    double hi_db = 30.0;
};

/// Jointly maximize over probe power and weight: outer bounded search on p1
/// (dB scale), inner weight optimization per candidate. The advantages do not
/// depend on p1, so they are plain inputs.
inline OptimumPoint optimize_p1_c1(double p2, double alpha1, double alpha2,
                                   const P1Window& window = {}) {
    if (!(p2 > 0.0) || !(alpha1 > 0.0) || !(alpha2 > 0.0))
        throw std::invalid_argument("p2, alpha1, alpha2 must be positive");
    if (!(window.lo_db < window.hi_db) || !std::isfinite(window.lo_db) ||
        !std::isfinite(window.hi_db))
        throw std::invalid_argument("p1 search window is empty or not finite");
    auto best_rate_at_db = [&](double p1_db) {
        return optimize_c1(db_to_linear(p1_db), p2, alpha1, alpha2).rs_star;
    };
    const double p1_db = detail::grid_then_golden_max(
        best_rate_at_db, window.lo_db, window.hi_db, detail::kCoarseGridPoints, detail::kP1DbTol);
    OptimumPoint opt = optimize_c1(db_to_linear(p1_db), p2, alpha1, alpha2);
    return opt;
}

namespace detail {

/// Mean of the clamped rates of the two opposite-direction sessions with a
/// shared precomputed weight. The swapped session keeps the same p1 and p2
/// and sees the advantages in reverse order.
inline double averaged_rate_with_c1(double c1_sq, double p1, double p2, double adv_fwd,
                                    double adv_rev) {
    const double fwd = secrecy_rate(SystemParams{p1, p2, adv_fwd, adv_rev, c1_sq});
    const double rev = secrecy_rate(SystemParams{p1, p2, adv_rev, adv_fwd, c1_sq});
    return 0.5 * (std::max(0.0, fwd) + std::max(0.0, rev));
}

}  // namespace detail

/// Averaged secrecy rate over a pair of opposite-direction sessions against
/// an eavesdropper at fractional distance d, with the weight optimized once
/// at the reference distance d0 and reused. Symmetric under d <-> 1-d.
inline double averaged_rate(double d0, double d, double p1, double p2, double path_loss_exponent,
                            double eta) {
    GeometryParams ref{d0, path_loss_exponent, eta};
    const auto [ref_a1, ref_a2] = eve_advantages(ref);
    const double c1_hat = optimize_c1(p1, p2, ref_a1, ref_a2).c1_sq_star;
    GeometryParams at{d, path_loss_exponent, eta};
    const auto [a1, a2] = eve_advantages(at);
    return detail::averaged_rate_with_c1(c1_hat, p1, p2, a1, a2);
}

/// Distance-sweep modes: reuse the weight and probe power chosen at the
/// reference distance, or re-optimize both jointly at every distance.
enum class SweepMode {
    kFixedFromReference,
    kJointOptimal,
};

struct DistanceSweepConfig {
    SweepMode mode = SweepMode::kFixedFromReference;
    double p1 = 3.1622776601683795;  ///< 5 dB; used (and optimized at d0) in fixed mode
    double p2 = 100.0;               ///< 20 dB
    double d0 = 0.5;
    double path_loss_exponent = 2.0;
    double eta = 1.0;
    std::size_t n_points = 99;  ///< grid d = i/(n_points+1), i = 1..n_points
    P1Window p1_window{};       ///< joint mode only
};

struct DistanceSweepRecord {
    double d;
    double rs_hat_plus;  ///< clamped rate of the forward session at this d
    double rs_bar;       ///< averaged clamped rate of the two opposite sessions
    double c1_sq_star;
    double p1_star_db;
    double rs_star;  ///< unclamped
};

struct DistanceSweep {
    DistanceSweepConfig config;
    std::vector<DistanceSweepRecord> records;
};

/// Sweep the eavesdropper distance across (0,1). Mirror entries are built
/// from the same advantage values with the roles swapped, so the rs_bar
/// column is exactly symmetric under grid reversal.
inline DistanceSweep sweep_distance(const DistanceSweepConfig& cfg) {
    if (cfg.n_points == 0) throw std::invalid_argument("distance grid must not be empty");
    if (!(cfg.p1 > 0.0) || !(cfg.p2 > 0.0)) throw std::invalid_argument("p1, p2 must be positive");
    GeometryParams ref{cfg.d0, cfg.path_loss_exponent, cfg.eta};
    ref.validate();

    const std::size_t n = cfg.n_points;
    const double denom = static_cast<double>(n + 1);
    std::vector<double> d_values(n), adv_near(n), adv_far(n);
    for (std::size_t i = 0; i < n; ++i) {
        d_values[i] = static_cast<double>(i + 1) / denom;
        GeometryParams g{d_values[i], cfg.path_loss_exponent, cfg.eta};
        const auto [a1, a2] = eve_advantages(g);
        adv_near[i] = a1;
        adv_far[i] = a2;
    }

    DistanceSweep sweep;
    sweep.config = cfg;
    sweep.records.resize(n);

    if (cfg.mode == SweepMode::kFixedFromReference) {
        const auto [ref_a1, ref_a2] = eve_advantages(ref);
        const double c1_hat = optimize_c1(cfg.p1, cfg.p2, ref_a1, ref_a2).c1_sq_star;
        const double p1_db = linear_to_db(cfg.p1);
        std::vector<double> rs_plus(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double rs =
                secrecy_rate(SystemParams{cfg.p1, cfg.p2, adv_near[i], adv_far[i], c1_hat});
            sweep.records[i].rs_star = rs;
            rs_plus[i] = std::max(0.0, rs);
        }
        for (std::size_t i = 0; i < n; ++i) {
            auto& r = sweep.records[i];
            r.d = d_values[i];
            r.rs_hat_plus = rs_plus[i];
            // The opposite-direction session at d sees the advantages swapped,
            // which is exactly the forward session at the mirrored grid index.
            r.rs_bar = 0.5 * (rs_plus[i] + rs_plus[n - 1 - i]);
            r.c1_sq_star = c1_hat;
            r.p1_star_db = p1_db;
        }
    } else {
        std::vector<double> rs_star_plus(n);
        for (std::size_t i = 0; i < n; ++i) {
            const OptimumPoint opt =
                optimize_p1_c1(cfg.p2, adv_near[i], adv_far[i], cfg.p1_window);
            auto& r = sweep.records[i];
            r.d = d_values[i];
            r.rs_star = opt.rs_star;
            r.c1_sq_star = opt.c1_sq_star;
            r.p1_star_db = linear_to_db(opt.p1_star);
            r.rs_hat_plus = std::max(0.0, opt.rs_star);
            rs_star_plus[i] = r.rs_hat_plus;
        }
        for (std::size_t i = 0; i < n; ++i)
            sweep.records[i].rs_bar = 0.5 * (rs_star_plus[i] + rs_star_plus[n - 1 - i]);
    }
    return sweep;
}

/// Long-format rate surface over probe power and weight at fixed echo SNR
/// and advantages. The weight grid is per-p1 fractions of the admissible
/// interval, so every row is a valid configuration.
struct SurfaceConfig {
    double p2 = 100.0;  ///< 20 dB
    double alpha1 = 4.0;
    double alpha2 = 4.0;
    double p1_lo_db = -10.0;
    double p1_hi_db = 30.0;
    std::size_t n_p1 = 101;
    std::size_t n_c1 = 99;  ///< c1_sq = (i/(n_c1+1)) * admissible bound
};

struct SurfacePoint {
    double p1_db;
    double c1_sq;
    double rs;
};

inline std::vector<SurfacePoint> rate_surface(const SurfaceConfig& cfg) {
    if (cfg.n_p1 == 0 || cfg.n_c1 == 0) throw std::invalid_argument("surface grid must not be empty");
    if (!(cfg.p1_lo_db <= cfg.p1_hi_db))
        throw std::invalid_argument("surface p1 bounds are reversed");
    std::vector<SurfacePoint> out;
    out.reserve(cfg.n_p1 * cfg.n_c1);
    for (std::size_t i = 0; i < cfg.n_p1; ++i) {
        const double p1_db =
            cfg.n_p1 == 1 ? cfg.p1_lo_db
                          : cfg.p1_lo_db + (cfg.p1_hi_db - cfg.p1_lo_db) * static_cast<double>(i) /
                                               static_cast<double>(cfg.n_p1 - 1);
        const double p1 = db_to_linear(p1_db);
        const double c_max = 1.0 / (1.0 + 1.0 / p1);
        for (std::size_t j = 0; j < cfg.n_c1; ++j) {
            const double frac = static_cast<double>(j + 1) / static_cast<double>(cfg.n_c1 + 1);
            const double c1 = frac * c_max;
            out.push_back(
                {p1_db, c1, secrecy_rate(SystemParams{p1, cfg.p2, cfg.alpha1, cfg.alpha2, c1})});
        }
    }
    return out;
}

}  // namespace steep
