#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace steep {

/// The five scalars that fully determine one round-trip configuration:
/// probe/echo channel SNRs, the eavesdropper's per-phase channel advantages,
/// and the squared probe-combining weight. SNRs are linear, not dB.
struct SystemParams {
    double p1;      ///< phase-1 probe-channel SNR, > 0
    double p2;      ///< phase-2 echo-channel SNR, > 0
    double alpha1;  ///< Eve's phase-1 channel advantage (sigma1^2/eps1^2), > 0
    double alpha2;  ///< Eve's phase-2 channel advantage (sigma2^2/eps2^2), > 0
    double c1_sq;   ///< squared probe weight, in [0, c1_sq_max())

    // Derived noise variances.
    double sigma1_sq() const { return 1.0 / p1; }
    double sigma2_sq() const { return 1.0 / p2; }
    double eps1_sq() const { return 1.0 / (alpha1 * p1); }
    double eps2_sq() const { return 1.0 / (alpha2 * p2); }

    /// Supremum of admissible c1_sq: at or beyond it the unit transmit-power
    /// identity c1^2 (1 + sigma1^2) + c2^2 = 1 forces c2^2 <= 0, leaving no
    /// power for the secret symbol.
    double c1_sq_max() const { return 1.0 / (1.0 + 1.0 / p1); }

    void validate() const {
        auto positive = [](double v, const char* name) {
            if (!(v > 0.0) || !std::isfinite(v))
                throw std::invalid_argument(std::string(name) + " must be positive and finite");
        };
        positive(p1, "p1");
        positive(p2, "p2");
        positive(alpha1, "alpha1");
        positive(alpha2, "alpha2");
        if (!std::isfinite(c1_sq) || c1_sq < 0.0 || c1_sq >= c1_sq_max())
            throw std::invalid_argument(
                "c1_sq must lie in [0, 1/(1 + 1/p1)): the upper bound leaves no "
                "transmit power for the secret symbol");
    }
};

/// Eavesdropper placement on the line between the two nodes. Maps to the
/// per-phase channel advantages via the path-loss law.
struct GeometryParams {
    double d;                   ///< fractional Eve distance from the phase-1 transmitter, in (0,1)
    double path_loss_exponent;  ///< in [1,2]; 2 for line-of-sight wireless
    double eta;                 ///< wiretapper efficiency, in (0,1]

    void validate() const {
        if (!(d > 0.0) || !(d < 1.0))
            throw std::invalid_argument("d must lie strictly inside (0, 1)");
        if (!(path_loss_exponent >= 1.0) || !(path_loss_exponent <= 2.0))
            throw std::invalid_argument("path_loss_exponent must lie in [1, 2]");
        if (!(eta > 0.0) || !(eta <= 1.0))
            throw std::invalid_argument("eta must lie in (0, 1]");
    }
};

/// Channel advantages (alpha1, alpha2) = (eta d^-a, eta (1-d)^-a) for an
/// eavesdropper at fractional distance d.
inline std::pair<double, double> eve_advantages(const GeometryParams& g) {
    g.validate();
    const double a = g.path_loss_exponent;
    return {g.eta * std::pow(g.d, -a), g.eta * std::pow(1.0 - g.d, -a)};
}

inline SystemParams params_from_geometry(double p1, double p2, const GeometryParams& g,
                                         double c1_sq) {
    const auto [a1, a2] = eve_advantages(g);
    SystemParams p{p1, p2, a1, a2, c1_sq};
    p.validate();
    return p;
}

}  // namespace steep
