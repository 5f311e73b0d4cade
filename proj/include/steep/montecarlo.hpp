#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "steep/params.hpp"
#include "steep/philox.hpp"
#include "steep/secrecy.hpp"

namespace steep {

/// Philox substream ids, one per signal stream; keeps all draws mutually
/// independent by construction.
namespace streams {
inline constexpr std::uint32_t kProbe = 0;       // x1
inline constexpr std::uint32_t kNoiseP1 = 1;     // w1
inline constexpr std::uint32_t kSecret = 2;      // s2
inline constexpr std::uint32_t kNoiseP2 = 3;     // w2
inline constexpr std::uint32_t kEveNoiseP1 = 4;  // v1
inline constexpr std::uint32_t kEveNoiseP2 = 5;  // v2
}  // namespace streams

/// Sample-by-sample record of K round trips: probe leg, echo leg and the
/// eavesdropper's two observations, plus the parameters and seed that
/// produced it.
struct SessionTranscript {
    SystemParams params{};
    std::uint64_t seed = 0;
    std::vector<std::complex<double>> x1;  ///< probes, unit variance
    std::vector<std::complex<double>> w1;  ///< phase-1 receiver noise, var sigma1^2
    std::vector<std::complex<double>> y1;  ///< x1 + w1
    std::vector<std::complex<double>> s2;  ///< secret symbols, unit variance
    std::vector<std::complex<double>> x2;  ///< c1 y1 + c2 s2
    std::vector<std::complex<double>> w2;  ///< phase-2 receiver noise, var sigma2^2
    std::vector<std::complex<double>> y2;  ///< x2 + w2
    std::vector<std::complex<double>> v1;  ///< Eve's phase-1 noise, var eps1^2
    std::vector<std::complex<double>> z1;  ///< x1 + v1
    std::vector<std::complex<double>> v2;  ///< Eve's phase-2 noise, var eps2^2
    std::vector<std::complex<double>> z2;  ///< x2 + v2

    std::size_t size() const { return x1.size(); }
};

/// Simulate K round trips. Deterministic in (params, K, seed); sample k of
/// each stream depends only on (seed, stream id, k), so any chunking across
/// workers reproduces the sequential result bit for bit.
inline SessionTranscript simulate(const SystemParams& p, std::size_t K, std::uint64_t seed) {
    p.validate();
    if (K < 1) throw std::invalid_argument("sample count K must be at least 1");
    SessionTranscript t;
    t.params = p;
    t.seed = seed;
    for (auto* v : {&t.x1, &t.w1, &t.y1, &t.s2, &t.x2, &t.w2, &t.y2, &t.v1, &t.z1, &t.v2, &t.z2})
        v->resize(K);
    const double c1 = std::sqrt(p.c1_sq);
    const double c2 = std::sqrt(c2_sq(p));
    const double s1sq = p.sigma1_sq(), s2sq = p.sigma2_sq();
    const double e1sq = p.eps1_sq(), e2sq = p.eps2_sq();
    for (std::size_t k = 0; k < K; ++k) {
        t.x1[k] = complex_gaussian(seed, streams::kProbe, k, 1.0);
        t.w1[k] = complex_gaussian(seed, streams::kNoiseP1, k, s1sq);
        t.y1[k] = t.x1[k] + t.w1[k];
        t.s2[k] = complex_gaussian(seed, streams::kSecret, k, 1.0);
        t.x2[k] = c1 * t.y1[k] + c2 * t.s2[k];
        t.w2[k] = complex_gaussian(seed, streams::kNoiseP2, k, s2sq);
        t.y2[k] = t.x2[k] + t.w2[k];
        t.v1[k] = complex_gaussian(seed, streams::kEveNoiseP1, k, e1sq);
        t.z1[k] = t.x1[k] + t.v1[k];
        t.v2[k] = complex_gaussian(seed, streams::kEveNoiseP2, k, e2sq);
        t.z2[k] = t.x2[k] + t.v2[k];
    }
    return t;
}

/// An empirical MSE together with the standard error of its mean, for
/// agreement checks against the closed forms.
struct MseEstimate {
    double mse;
    double std_err;  ///< sample std of the per-sample squared error / sqrt(K)
};

namespace detail {

inline MseEstimate mean_sq_error(const std::vector<std::complex<double>>& err) {
    const std::size_t K = err.size();
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& e : err) {
        const double q = std::norm(e);
        sum += q;
        sum_sq += q * q;
    }
    const double mean = sum / static_cast<double>(K);
    const double var = std::max(0.0, sum_sq / static_cast<double>(K) - mean * mean);
    return {mean, std::sqrt(var / static_cast<double>(K))};
}

inline void require_samples(const SessionTranscript& t, std::size_t min_k, const char* what) {
    if (t.size() < min_k)
        throw std::invalid_argument(std::string(what) + " needs at least " +
                                    std::to_string(min_k) + " samples");
}

}  // namespace detail

/// Empirical MSE of the legitimate receiver: scalar estimate of the secret
/// symbol from the echo with the known probe contribution removed. The
/// estimator coefficient comes from the model moments, not from the data, so
/// the only randomness left is Monte Carlo noise.
inline MseEstimate empirical_mse_user(const SessionTranscript& t) {
    detail::require_samples(t, 1000, "empirical_mse_user");
    const SystemParams& p = t.params;
    const double c1 = std::sqrt(p.c1_sq);
    const double c2v = std::sqrt(c2_sq(p));
    const double gain = c2v / (c2v * c2v + p.c1_sq * p.sigma1_sq() + p.sigma2_sq());
    std::vector<std::complex<double>> err(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) {
        const std::complex<double> dy2 = t.y2[k] - c1 * t.x1[k];
        err[k] = t.s2[k] - gain * dy2;
    }
    return detail::mean_sq_error(err);
}

/// Empirical MSE of the eavesdropper's estimate from her two observations,
/// with the 2x2 estimator built from the model second moments.
inline MseEstimate empirical_mse_eve(const SessionTranscript& t) {
    detail::require_samples(t, 1000, "empirical_mse_eve");
    const SystemParams& p = t.params;
    const double c1 = std::sqrt(p.c1_sq);
    const double c2v = std::sqrt(c2_sq(p));
    const double m11 = 1.0 + p.eps1_sq();
    const double m22 = 1.0 + p.eps2_sq();
    const double det = m11 * m22 - p.c1_sq;
    if (!(det > kMseEveDenomRelTol * m11 * m22))
        throw std::domain_error("eavesdropper moment matrix is singular");
    const double g1 = -c1 * c2v / det;
    const double g2 = c2v * m11 / det;
    std::vector<std::complex<double>> err(t.size());
    for (std::size_t k = 0; k < t.size(); ++k)
        err[k] = t.s2[k] - (g1 * t.z1[k] + g2 * t.z2[k]);
    return detail::mean_sq_error(err);
}

/// Sanity variant of the eavesdropper estimate with the second moments taken
/// from the transcript itself instead of the model; converges to the same
/// value and is only used as a cross-check.
inline MseEstimate empirical_mse_eve_sample_cov(const SessionTranscript& t) {
    detail::require_samples(t, 1000, "empirical_mse_eve_sample_cov");
    const std::size_t K = t.size();
    const double n = static_cast<double>(K);
    double a11 = 0.0, a22 = 0.0;
    std::complex<double> a12{0.0, 0.0}, r1{0.0, 0.0}, r2{0.0, 0.0};
    for (std::size_t k = 0; k < K; ++k) {
        a11 += std::norm(t.z1[k]);
        a22 += std::norm(t.z2[k]);
        a12 += t.z1[k] * std::conj(t.z2[k]);
        r1 += t.s2[k] * std::conj(t.z1[k]);
        r2 += t.s2[k] * std::conj(t.z2[k]);
    }
    a11 /= n;
    a22 /= n;
    a12 /= n;
    r1 /= n;
    r2 /= n;
    const double det = a11 * a22 - std::norm(a12);
    if (!(det > kMseEveDenomRelTol * a11 * a22))
        throw std::domain_error("sample covariance of Eve's observations is singular");
    // Row vector r A^-1 for Hermitian A = [[a11, a12], [conj(a12), a22]].
    const std::complex<double> g1 = (r1 * a22 - r2 * std::conj(a12)) / det;
    const std::complex<double> g2 = (r2 * a11 - r1 * a12) / det;
    std::vector<std::complex<double>> err(K);
    for (std::size_t k = 0; k < K; ++k)
        err[k] = t.s2[k] - (g1 * t.z1[k] + g2 * t.z2[k]);
    return detail::mean_sq_error(err);
}

}  // namespace steep
