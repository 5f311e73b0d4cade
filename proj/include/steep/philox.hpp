#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace steep {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11). A 128-bit
/// block is a pure function of (seed, stream, index), so every sample of
/// every signal stream is addressable: chunks computed in any order or on any
/// number of workers recombine to the exact single-worker result.
struct Philox4x32 {
    using Block = std::array<std::uint32_t, 4>;

    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
    static constexpr int kRounds = 10;

    /// The raw ten-round block transform on an arbitrary counter and key.
    static Block apply(Block ctr, std::uint32_t k0, std::uint32_t k1) {
        for (int r = 0; r < kRounds; ++r) {
            ctr = round(ctr, k0, k1);
            k0 += kWeyl0;
            k1 += kWeyl1;
        }
        return ctr;
    }

    /// Block addressed by (seed, stream, index): the 64-bit index fills the
    /// low counter words, the stream id the third, and the seed is the key.
    static Block generate(std::uint64_t seed, std::uint32_t stream, std::uint64_t index) {
        return apply(Block{static_cast<std::uint32_t>(index),
                           static_cast<std::uint32_t>(index >> 32), stream, 0u},
                     static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32));
    }

private:
    static Block round(const Block& in, std::uint32_t k0, std::uint32_t k1) {
        const std::uint64_t prod0 = static_cast<std::uint64_t>(kMul0) * in[0];
        const std::uint64_t prod1 = static_cast<std::uint64_t>(kMul1) * in[2];
        return Block{static_cast<std::uint32_t>(prod1 >> 32) ^ in[1] ^ k0,
                     static_cast<std::uint32_t>(prod1),
                     static_cast<std::uint32_t>(prod0 >> 32) ^ in[3] ^ k1,
                     static_cast<std::uint32_t>(prod0)};
    }
};

namespace detail {

/// 53-bit uniform in (0, 1]; never zero, so its log is finite.
inline double u01_open_at_zero(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t m = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
    return static_cast<double>(m + 1) * 0x1.0p-53;
}

/// 53-bit uniform in [0, 1).
inline double u01(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t m = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
    return static_cast<double>(m) * 0x1.0p-53;
}

}  // namespace detail

/// One circular complex Gaussian sample of total variance `var` (split
/// equally between real and imaginary parts), addressed by
/// (seed, stream, index). Box-Muller on one Philox block.
inline std::complex<double> complex_gaussian(std::uint64_t seed, std::uint32_t stream,
                                             std::uint64_t index, double var) {
    const auto b = Philox4x32::generate(seed, stream, index);
    const double u1 = detail::u01_open_at_zero(b[0], b[1]);
    const double u2 = detail::u01(b[2], b[3]);
    const double mag = std::sqrt(-std::log(u1) * var);
    const double ang = 2.0 * std::numbers::pi * u2;
    return {mag * std::cos(ang), mag * std::sin(ang)};
}

/// One uniform 64-bit word addressed by (seed, stream, index).
inline std::uint64_t uniform_u64(std::uint64_t seed, std::uint32_t stream, std::uint64_t index) {
    const auto b = Philox4x32::generate(seed, stream, index);
    return (static_cast<std::uint64_t>(b[0]) << 32) | b[1];
}

}  // namespace steep
