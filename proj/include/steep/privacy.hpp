#pragma once

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "steep/coding.hpp"
#include "steep/montecarlo.hpp"
#include "steep/optimize.hpp"
#include "steep/params.hpp"
#include "steep/philox.hpp"
#include "steep/secrecy.hpp"
#include "steep/units.hpp"

namespace steep {

/// Philox substreams reserved for key material, disjoint from the signal
/// streams used by the channel simulation.
namespace streams {
inline constexpr std::uint32_t kToeplitzDiag = 16;
inline constexpr std::uint32_t kPayloadFwd = 17;
inline constexpr std::uint32_t kPayloadRev = 18;
}  // namespace streams

/// Packed bit sequence, LSB-first within each 64-bit word.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0u) {}

    /// n pseudorandom bits addressed by (seed, stream).
    static BitVec random(std::size_t n, std::uint64_t seed, std::uint32_t stream) {
        BitVec v(n);
        for (std::size_t w = 0; w < v.w_.size(); ++w)
            v.w_[w] = uniform_u64(seed, stream, w);
        v.mask_tail();
        return v;
    }

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool get(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i, bool b) {
        const std::uint64_t m = std::uint64_t{1} << (i % 64);
        if (b)
            w_[i / 64] |= m;
        else
            w_[i / 64] &= ~m;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

    friend BitVec operator^(const BitVec& a, const BitVec& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("bit-vector length mismatch");
        BitVec r(a.n_);
        for (std::size_t w = 0; w < r.w_.size(); ++w) r.w_[w] = a.w_[w] ^ b.w_[w];
        return r;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

    /// Concatenation: bits of `b` follow the bits of `a`.
    static BitVec concat(const BitVec& a, const BitVec& b) {
        BitVec r(a.n_ + b.n_);
        for (std::size_t i = 0; i < a.n_; ++i) r.set(i, a.get(i));
        for (std::size_t i = 0; i < b.n_; ++i) r.set(a.n_ + i, b.get(i));
        return r;
    }

    /// Lowercase hex, one byte per two digits; bit i is bit (i % 8) of byte
    /// (i / 8), and a partial final byte is zero-padded.
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        const std::size_t n_bytes = (n_ + 7) / 8;
        std::string s;
        s.reserve(2 * n_bytes);
        for (std::size_t b = 0; b < n_bytes; ++b) {
            const unsigned byte = static_cast<unsigned>((w_[b / 8] >> ((b % 8) * 8)) & 0xffu);
            s.push_back(digits[byte >> 4]);
            s.push_back(digits[byte & 0xf]);
        }
        return s;
    }

private:
    void mask_tail() {
        if (n_ % 64 != 0 && !w_.empty())
            w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Which node transmitted the probes in phase 1 of a session.
enum class SessionDirection { kAliceFirst, kBobFirst };

/// The reliably decoded phase-2 payload of one session.
struct SessionPayload {
    BitVec bits;
    SessionDirection direction = SessionDirection::kAliceFirst;
};

struct SecretKey {
    BitVec bits;
    std::uint64_t hash_seed = 0;  ///< public randomness identifying the hash instance
    double declared_rate = 0.0;   ///< averaged secrecy rate used for sizing
};

/// Hard key-size bound from the averaged secrecy rate: floor(2 K rbar) bits
/// for K probes per session. Zero means no extractable key.
inline std::uint64_t key_length(std::uint64_t K, double rbar) {
    if (K < 1) throw std::invalid_argument("K must be at least 1");
    if (!(rbar >= 0.0) || !std::isfinite(rbar))
        throw std::invalid_argument("rbar must be finite and non-negative");
    return static_cast<std::uint64_t>(std::floor(2.0 * static_cast<double>(K) * rbar));
}

namespace detail {

/// out_len x in_len binary Toeplitz matrix applied over GF(2). The matrix is
/// defined by its diagonals: entry (i, j) = diag[i + in_len - 1 - j], so
/// diag needs rows + cols - 1 bits. Word-parallel: output bit i is the
/// parity of (reversed input) AND (diag window at offset i).
inline BitVec toeplitz_multiply(const BitVec& diag, const BitVec& input, std::size_t out_len) {
    const std::size_t cols = input.size();
    BitVec reversed(cols);
    for (std::size_t j = 0; j < cols; ++j) reversed.set(j, input.get(cols - 1 - j));

    // Guard word so 64-bit windows can be read past the last diagonal bit.
    std::vector<std::uint64_t> d(diag.words());
    d.push_back(0u);
    auto window = [&d](std::size_t bit) {
        const std::size_t q = bit / 64, r = bit % 64;
        return r == 0 ? d[q] : (d[q] >> r) | (d[q + 1] << (64 - r));
    };

    BitVec out(out_len);
    const auto& rw = reversed.words();
    for (std::size_t i = 0; i < out_len; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < rw.size(); ++w) acc ^= rw[w] & window(i + 64 * w);
        out.set(i, std::popcount(acc) & 1u);
    }
    return out;
}

}  // namespace detail

/// Compress the two session payloads into a key of exactly out_len bits with
/// a 2-universal binary Toeplitz hash. The instance is fixed by hash_seed:
/// its in+out-1 diagonal bits are expanded from the seed with the pinned
/// generator. Linear over GF(2) and deterministic in (inputs, hash_seed).
inline SecretKey amplify(const SessionPayload& d1, const SessionPayload& d2, std::size_t out_len,
                         std::uint64_t hash_seed, double declared_rate = 0.0) {
    if (d1.bits.empty() || d1.bits.size() != d2.bits.size())
        throw std::invalid_argument("session payloads must be non-empty and of equal length");
    const std::size_t in_len = d1.bits.size() + d2.bits.size();
    if (out_len > in_len)
        throw std::invalid_argument("requested key length exceeds the payload material");
    SecretKey key;
    key.hash_seed = hash_seed;
    key.declared_rate = declared_rate;
    if (out_len == 0) return key;
    const BitVec diag = BitVec::random(in_len + out_len - 1, hash_seed, streams::kToeplitzDiag);
    key.bits = detail::toeplitz_multiply(diag, BitVec::concat(d1.bits, d2.bits), out_len);
    return key;
}

/// Inputs for a full two-session key-generation run.
struct KeygenScenario {
    double p1 = 3.1622776601683795;  ///< 5 dB
    double p2 = 100.0;               ///< 20 dB
    GeometryParams geometry{0.5, 2.0, 1.0};  ///< actual (unknown-to-users) Eve position
    double d0 = 0.5;                 ///< reference distance the weight is tuned at
    std::uint64_t K = 10000;         ///< probes per session
    CodePair pair{};                 ///< selected code rate / constellation
    std::uint64_t noise_seed = 1;
    std::uint64_t payload_seed = 2;
    std::uint64_t hash_seed = 3;
    std::size_t worst_case_grid = 99;  ///< d-grid for the worst-case averaged rate
};

/// Per-session diagnostics of one run.
struct SessionOutcome {
    double cap_user = 0.0;
    double cap_eve = 0.0;
    bool user_gate = false;  ///< legitimate receiver can decode the payload
    bool eve_gate = false;   ///< Eve could also decode it (diagnostic only)
    MseEstimate emp_user{};  ///< empirical check of the closed forms; NaN for small K
    MseEstimate emp_eve{};
};

struct KeygenReport {
    double c1_sq = 0.0;          ///< weight tuned at d0 and shared by both sessions
    double rbar = 0.0;           ///< worst-case averaged secrecy rate used for sizing
    std::uint64_t payload_bits = 0;  ///< N per session
    std::uint64_t key_bits = 0;
    SessionOutcome forward;   ///< Alice transmits the probes
    SessionOutcome reverse;   ///< Bob transmits the probes
    bool success = false;
    std::string failure;
};

struct KeygenResult {
    SecretKey key;
    KeygenReport report;
};

/// Run the whole pipeline: tune the weight at the reference distance,
/// simulate both session directions, gate deliverability through the
/// idealized capacity gate, size the key by the worst-case averaged rate and
/// hash the two payloads down to it. Decoding itself is idealized: payload
/// bits stand in for coded message content declared deliverable by the gate.
inline KeygenResult end_to_end_keygen(const KeygenScenario& sc) {
    if (sc.K < 1) throw std::invalid_argument("K must be at least 1");
    if (sc.pair.m < 2 || sc.pair.bits_per_symbol < 1)
        throw std::invalid_argument("scenario needs a selected code pair");
    sc.geometry.validate();
    GeometryParams ref{sc.d0, sc.geometry.path_loss_exponent, sc.geometry.eta};
    ref.validate();

    KeygenResult res;
    KeygenReport& rep = res.report;

    const auto [ref_a1, ref_a2] = eve_advantages(ref);
    rep.c1_sq = optimize_c1(sc.p1, sc.p2, ref_a1, ref_a2).c1_sq_star;

    const auto [a1, a2] = eve_advantages(sc.geometry);
    const SystemParams fwd{sc.p1, sc.p2, a1, a2, rep.c1_sq};
    const SystemParams rev{sc.p1, sc.p2, a2, a1, rep.c1_sq};

    auto run_session = [&](const SystemParams& p, std::uint64_t seed) {
        SessionOutcome s;
        const SecrecyReport r = secrecy_report(p);
        s.cap_user = r.cap_user;
        s.cap_eve = r.cap_eve;
        s.user_gate = reliable_capacity_gate(sc.pair, r.cap_user);
        s.eve_gate = reliable_capacity_gate(sc.pair, r.cap_eve);
        const SessionTranscript t = simulate(p, sc.K, seed);
        if (sc.K >= 1000) {
            s.emp_user = empirical_mse_user(t);
            s.emp_eve = empirical_mse_eve(t);
        } else {
            const double nan = std::nan("");
            s.emp_user = {nan, nan};
            s.emp_eve = {nan, nan};
        }
        return s;
    };
    rep.forward = run_session(fwd, sc.noise_seed);
    rep.reverse = run_session(rev, sc.noise_seed + 1);

    // Payload size per session from the code pair, as an exact rational floor.
    rep.payload_bits = sc.K * static_cast<std::uint64_t>(sc.pair.rate.num) *
                       static_cast<std::uint64_t>(sc.pair.bits_per_symbol) /
                       static_cast<std::uint64_t>(sc.pair.rate.den);

    // Sizing uses the worst case over Eve positions, not the actual one.
    const std::size_t n = sc.worst_case_grid;
    double rbar = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i <= n; ++i) {
        GeometryParams g{static_cast<double>(i) / static_cast<double>(n + 1),
                         sc.geometry.path_loss_exponent, sc.geometry.eta};
        const auto [gi1, gi2] = eve_advantages(g);
        rbar = std::min(rbar, detail::averaged_rate_with_c1(rep.c1_sq, sc.p1, sc.p2, gi1, gi2));
    }
    rep.rbar = rbar;
    rep.key_bits = key_length(sc.K, rbar);

    if (!rep.forward.user_gate || !rep.reverse.user_gate) {
        rep.success = false;
        rep.failure = "legitimate capacity gate failed; the selected code pair is not decodable";
        return res;
    }
    if (rep.payload_bits == 0) {
        rep.success = false;
        rep.failure = "code pair yields an empty payload at this K";
        return res;
    }

    SessionPayload d1{BitVec::random(rep.payload_bits, sc.payload_seed, streams::kPayloadFwd),
                      SessionDirection::kAliceFirst};
    SessionPayload d2{BitVec::random(rep.payload_bits, sc.payload_seed, streams::kPayloadRev),
                      SessionDirection::kBobFirst};
    res.key = amplify(d1, d2, rep.key_bits, sc.hash_seed, rbar);
    rep.success = true;
    return res;
}

}  // namespace steep
