#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "steep/params.hpp"

namespace steep {

/// Relative tolerance on the eavesdropper-MSE denominator; at or below it the
/// parameter combination is outside the model's validity and we refuse to
/// divide rather than hand a negative MSE to an optimizer.
inline constexpr double kMseEveDenomRelTol = 1e-12;

namespace detail {

/// Denominator of the eavesdropper-MSE expression,
/// (1+eps1)(1+eps2-c2) - c1, in the rearranged form
/// (1+eps1) eps2 + c1 (eps1 + sigma1 + eps1 sigma1) that is free of
/// cancellation whenever c2 comes from the unit-power identity.
inline double mse_eve_denom_from_identity(double c1_sq, double sigma1_sq, double eps1_sq,
                                          double eps2_sq) {
    return (1.0 + eps1_sq) * eps2_sq + c1_sq * (eps1_sq + sigma1_sq + eps1_sq * sigma1_sq);
}

/// Closed forms on raw variances, for callers that need degenerate limits
/// (for example a noiseless eavesdropper) that finite advantages cannot
/// express. c2_sq is taken as given, not derived.
inline double mse_user_raw(double c1_sq, double c2_sq, double sigma1_sq, double sigma2_sq) {
    return 1.0 / (1.0 + c2_sq / (c1_sq * sigma1_sq + sigma2_sq));
}

inline double mse_eve_raw(double c1_sq, double c2_sq, double eps1_sq, double eps2_sq) {
    const double den = (1.0 + eps1_sq) * (1.0 + eps2_sq - c2_sq) - c1_sq;
    const double scale = (1.0 + eps1_sq) * (1.0 + eps2_sq);
    if (!(den > kMseEveDenomRelTol * scale))
        throw std::domain_error("eavesdropper-MSE denominator is not positive");
    return 1.0 / (1.0 + c2_sq * (1.0 + eps1_sq) / den);
}

}  // namespace detail

/// Squared secret-symbol weight from the unit transmit-power identity
/// c1^2 (1 + sigma1^2) + c2^2 = 1. Strictly positive on the admissible range.
inline double c2_sq(const SystemParams& p) {
    p.validate();
    return 1.0 - p.c1_sq * (1.0 + p.sigma1_sq());
}

/// MSE of the legitimate receiver's estimate of the secret symbol, built from
/// the echo with the known probe removed.
inline double mse_user(const SystemParams& p) {
    return detail::mse_user_raw(p.c1_sq, c2_sq(p), p.sigma1_sq(), p.sigma2_sq());
}

/// MSE of the eavesdropper's two-observation estimate of the secret symbol.
inline double mse_eve(const SystemParams& p) {
    const double c2 = c2_sq(p);
    const double den =
        detail::mse_eve_denom_from_identity(p.c1_sq, p.sigma1_sq(), p.eps1_sq(), p.eps2_sq());
    const double scale = (1.0 + p.eps1_sq()) * (1.0 + p.eps2_sq());
    if (!(den > kMseEveDenomRelTol * scale))
        throw std::domain_error("eavesdropper-MSE denominator is not positive");
    return 1.0 / (1.0 + c2 * (1.0 + p.eps1_sq()) / den);
}

/// Secrecy rate in bits per round-trip sample, log2(MSE_E) - log2(MSE_U),
/// evaluated through log1p of the exactly cancelled difference so the sign
/// stays reliable arbitrarily close to the positivity threshold.
inline double secrecy_rate(const SystemParams& p) {
    const double c2 = c2_sq(p);
    const double s1 = p.sigma1_sq();
    const double e1 = p.eps1_sq();
    const double e2 = p.eps2_sq();
    const double bu = p.c1_sq * s1 + p.sigma2_sq();
    const double den = detail::mse_eve_denom_from_identity(p.c1_sq, s1, e1, e2);
    const double scale = (1.0 + e1) * (1.0 + e2);
    if (!(den > kMseEveDenomRelTol * scale))
        throw std::domain_error("eavesdropper-MSE denominator is not positive");
    const double xe = c2 * (1.0 + e1) / den;
    // den - (1+e1) bu collapses to this gap; its sign is exactly the sign of
    // the rate, which is what the threshold machinery keys on.
    const double gap = e1 * p.c1_sq - (1.0 + e1) * (1.0 - 1.0 / p.alpha2) / p.p2;
    const double diff = c2 * gap / (bu * den);
    return std::log1p(diff / (1.0 + xe)) / std::numbers::ln2;
}

/// Everything one parameter point yields: both MSEs, both effective
/// capacities, and the secrecy rate with its clamp.
struct SecrecyReport {
    double mse_user;  ///< in (0,1]
    double mse_eve;   ///< in (0,1]
    double cap_user;  ///< -log2(mse_user), bits per round-trip sample
    double cap_eve;   ///< -log2(mse_eve), bits per round-trip sample
    double rs;        ///< cap_user - cap_eve; may be negative
    double rs_plus;   ///< max(0, rs)
};

inline SecrecyReport secrecy_report(const SystemParams& p) {
    SecrecyReport r{};
    r.mse_user = mse_user(p);
    r.mse_eve = mse_eve(p);
    r.cap_user = -std::log2(r.mse_user);
    r.cap_eve = -std::log2(r.mse_eve);
    r.rs = secrecy_rate(p);
    r.rs_plus = std::max(0.0, r.rs);
    return r;
}

/// High-SNR limit of the secrecy rate, log2(1 + 1/alpha1): what remains when
/// both transmit powers are large and the echo power dominates the probe
/// power. Independent of the combining weight.
inline double limit_rate(double alpha1) {
    if (!(alpha1 > 0.0)) throw std::invalid_argument("alpha1 must be positive");
    return std::log2(1.0 + 1.0 / alpha1);
}

}  // namespace steep
