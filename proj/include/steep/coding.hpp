#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace steep {

/// Exact code rate as a reduced fraction; the standard rate lists are exact
/// fractions and comparisons against them should carry no rate rounding.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (d <= 0 || n <= 0) throw std::invalid_argument("code rate must be positive");
        const std::int64_t g = std::gcd(n, d);
        num /= g;
        den /= g;
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    /// Parse "n/d" or "n".
    static Rational parse(const std::string& s) {
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s), 1);
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("cannot parse code rate '" + s + "'");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("code rate '" + s + "' is out of range");
        }
    }
};

/// Published LDPC code rates (DVB-S2, 5G NR, WiFi, CCSDS).
inline const std::vector<Rational>& default_code_rates() {
    static const std::vector<Rational> rates = {
        {1, 4}, {1, 3}, {2, 5}, {1, 2}, {3, 5}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {8, 9}, {9, 10}};
    return rates;
}

/// A code rate and constellation size whose spectral efficiency lands
/// strictly between the eavesdropper's and the legitimate receiver's
/// effective capacity per coded bit.
struct CodePair {
    Rational rate;
    std::uint64_t m = 0;      ///< constellation size, exact power of 2, >= 2
    int bits_per_symbol = 0;  ///< log2(m)
    double lower_margin = 0;  ///< log2(m) - cap_eve/rate
    double upper_margin = 0;  ///< cap_user/rate - log2(m)

    double min_margin() const { return std::min(lower_margin, upper_margin); }
};

/// Idealized decodability: a receiver with effective capacity `cap` decodes
/// the coded packet iff rate * log2(m) < cap, strictly.
inline bool reliable_capacity_gate(const CodePair& pair, double cap) {
    return static_cast<double>(pair.rate.num * pair.bits_per_symbol) /
               static_cast<double>(pair.rate.den) <
           cap;
}

/// Raised when the capacities admit no secrecy gap at all, as opposed to a
/// gap that no listed pair happens to fit (which returns an empty list).
struct NoCapacityGap : std::domain_error {
    NoCapacityGap() : std::domain_error("cap_user does not exceed cap_eve: no secrecy gap") {}
};

/// All pairs with cap_eve/R < log2(M) < cap_user/R and M <= m_max, ranked by
/// descending worst-side margin. Duplicate rates in the input are collapsed;
/// the result does not depend on the input order.
inline std::vector<CodePair> select_pairs(double cap_user, double cap_eve,
                                          const std::vector<Rational>& rates = default_code_rates(),
                                          std::uint64_t m_max = 1u << 10) {
    if (!(cap_eve > 0.0) || !std::isfinite(cap_user) || !std::isfinite(cap_eve))
        throw std::invalid_argument("capacities must be finite with cap_eve > 0");
    if (rates.empty()) throw std::invalid_argument("rate list must not be empty");
    if (m_max < 2) throw std::invalid_argument("m_max must be at least 2");
    if (!(cap_user > cap_eve)) throw NoCapacityGap();

    std::vector<Rational> unique_rates;
    for (const auto& r : rates)
        if (std::find(unique_rates.begin(), unique_rates.end(), r) == unique_rates.end())
            unique_rates.push_back(r);

    int max_bits = 0;
    while ((std::uint64_t{1} << (max_bits + 1)) <= m_max) ++max_bits;

    std::vector<CodePair> out;
    for (const auto& rate : unique_rates) {
        const double inv_rate = static_cast<double>(rate.den) / static_cast<double>(rate.num);
        const double lo = cap_eve * inv_rate;
        const double hi = cap_user * inv_rate;
        for (int bits = 1; bits <= max_bits; ++bits) {
            const double lower = static_cast<double>(bits) - lo;
            const double upper = hi - static_cast<double>(bits);
            if (lower > 0.0 && upper > 0.0)
                out.push_back({rate, std::uint64_t{1} << bits, bits, lower, upper});
        }
    }
    std::sort(out.begin(), out.end(), [](const CodePair& a, const CodePair& b) {
        if (a.min_margin() != b.min_margin()) return a.min_margin() > b.min_margin();
        if (a.bits_per_symbol != b.bits_per_symbol) return a.bits_per_symbol < b.bits_per_symbol;
        return a.rate.value() < b.rate.value();
    });
    return out;
}

}  // namespace steep
