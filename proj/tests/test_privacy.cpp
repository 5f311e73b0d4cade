#include <catch2/catch.hpp>

#include <cmath>
#include <random>

#include "steep/privacy.hpp"
#include "steep/units.hpp"

using namespace steep;

namespace {

SessionPayload payload_from_bits(BitVec bits, SessionDirection dir) {
    return SessionPayload{std::move(bits), dir};
}

SessionPayload random_payload(std::size_t n, std::uint64_t seed, std::uint32_t stream,
                              SessionDirection dir) {
    return payload_from_bits(BitVec::random(n, seed, stream), dir);
}

/// Independent oracle: materialize the Toeplitz matrix bit by bit from the
/// same diagonal sequence and multiply naively.
BitVec naive_toeplitz_key(std::size_t out_len, const SessionPayload& d1,
                          const SessionPayload& d2, std::uint64_t hash_seed) {
    const std::size_t cols = d1.bits.size() + d2.bits.size();
    const BitVec diag = BitVec::random(cols + out_len - 1, hash_seed, streams::kToeplitzDiag);
    const BitVec input = BitVec::concat(d1.bits, d2.bits);
    BitVec key(out_len);
    for (std::size_t i = 0; i < out_len; ++i) {
        bool acc = false;
        for (std::size_t j = 0; j < cols; ++j)
            if (input.get(j) && diag.get(i + cols - 1 - j)) acc = !acc;
        key.set(i, acc);
    }
    return key;
}

}  // namespace

TEST_CASE("bit vectors") {
    BitVec v(70);
    CHECK(v.size() == 70);
    for (std::size_t i = 0; i < 70; ++i) CHECK_FALSE(v.get(i));
    v.set(0, true);
    v.set(69, true);
    CHECK(v.get(0));
    CHECK(v.get(69));
    CHECK_FALSE(v.get(68));
    v.set(69, false);
    CHECK_FALSE(v.get(69));

    const BitVec a = BitVec::random(128, 1, 0);
    CHECK(a == BitVec::random(128, 1, 0));
    CHECK(!(a == BitVec::random(128, 2, 0)));
    CHECK((a ^ a) == BitVec(128));

    BitVec h(12);
    h.set(0, true);
    h.set(9, true);
    CHECK(h.to_hex() == "0102");  // bytes little-bit-first, zero-padded tail

    const BitVec cat = BitVec::concat(h, a);
    CHECK(cat.size() == 140);
    CHECK(cat.get(0));
    CHECK(cat.get(12) == a.get(0));
}

TEST_CASE("key length bound") {
    CHECK(key_length(10000, 0.164) == 3280);
    CHECK(key_length(123, 0.0) == 0);
    CHECK(key_length(3, 1.0 / 3.0) == 2);  // exact floor at the boundary
    CHECK(key_length(1000, 0.5001) == 1000);
    CHECK_THROWS_AS(key_length(0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(key_length(10, -0.1), std::invalid_argument);
}

TEST_CASE("toeplitz amplification") {
    SECTION("all-zero input yields the all-zero key for any instance") {
        const SessionPayload z1 = payload_from_bits(BitVec(500), SessionDirection::kAliceFirst);
        const SessionPayload z2 = payload_from_bits(BitVec(500), SessionDirection::kBobFirst);
        for (std::uint64_t seed : {1ull, 77ull, 0xffffffffffffffffull})
            CHECK(amplify(z1, z2, 64, seed).bits == BitVec(64));
    }
    SECTION("deterministic in inputs and seed") {
        const auto d1 = random_payload(300, 5, streams::kPayloadFwd, SessionDirection::kAliceFirst);
        const auto d2 = random_payload(300, 5, streams::kPayloadRev, SessionDirection::kBobFirst);
        CHECK(amplify(d1, d2, 48, 9).bits == amplify(d1, d2, 48, 9).bits);
        CHECK(amplify(d1, d2, 48, 9).hash_seed == 9);
    }
    SECTION("distinct seeds give distinct keys") {
        const auto d1 = random_payload(256, 6, streams::kPayloadFwd, SessionDirection::kAliceFirst);
        const auto d2 = random_payload(256, 6, streams::kPayloadRev, SessionDirection::kBobFirst);
        const BitVec base = amplify(d1, d2, 32, 0).bits;
        int collisions = 0;
        for (std::uint64_t seed = 1; seed <= 1000; ++seed)
            if (amplify(d1, d2, 32, seed).bits == base) ++collisions;
        CHECK(collisions == 0);
    }
    SECTION("linear over the two-element field") {
        std::mt19937 rng(12);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 64 + 17 * trial;
            const auto a1 = random_payload(n, 100 + trial, streams::kPayloadFwd,
                                           SessionDirection::kAliceFirst);
            const auto a2 = random_payload(n, 100 + trial, streams::kPayloadRev,
                                           SessionDirection::kBobFirst);
            const auto b1 = random_payload(n, 200 + trial, streams::kPayloadFwd,
                                           SessionDirection::kAliceFirst);
            const auto b2 = random_payload(n, 200 + trial, streams::kPayloadRev,
                                           SessionDirection::kBobFirst);
            const SessionPayload x1 =
                payload_from_bits(a1.bits ^ b1.bits, SessionDirection::kAliceFirst);
            const SessionPayload x2 =
                payload_from_bits(a2.bits ^ b2.bits, SessionDirection::kBobFirst);
            const std::uint64_t seed = 0xabcd + trial;
            CHECK(amplify(x1, x2, 40, seed).bits ==
                  (amplify(a1, a2, 40, seed).bits ^ amplify(b1, b2, 40, seed).bits));
        }
    }
    SECTION("matches the explicit matrix oracle, including single-bit flips") {
        const std::size_t n = 40, out = 16;
        auto d1 = random_payload(n, 31, streams::kPayloadFwd, SessionDirection::kAliceFirst);
        auto d2 = random_payload(n, 31, streams::kPayloadRev, SessionDirection::kBobFirst);
        const std::uint64_t seed = 0x70e;
        CHECK(amplify(d1, d2, out, seed).bits == naive_toeplitz_key(out, d1, d2, seed));
        for (std::size_t j = 0; j < n; ++j) {
            d1.bits.set(j, !d1.bits.get(j));
            CHECK(amplify(d1, d2, out, seed).bits == naive_toeplitz_key(out, d1, d2, seed));
            d1.bits.set(j, !d1.bits.get(j));
        }
    }
    SECTION("input validation") {
        const auto d1 = random_payload(100, 1, streams::kPayloadFwd, SessionDirection::kAliceFirst);
        const auto d2 = random_payload(101, 1, streams::kPayloadRev, SessionDirection::kBobFirst);
        const auto ok = random_payload(100, 1, streams::kPayloadRev, SessionDirection::kBobFirst);
        CHECK_THROWS_AS(amplify(d1, d2, 10, 1), std::invalid_argument);
        CHECK_THROWS_AS(amplify(d1, ok, 201, 1), std::invalid_argument);
        const SessionPayload empty;
        CHECK_THROWS_AS(amplify(empty, empty, 0, 1), std::invalid_argument);
        CHECK(amplify(d1, ok, 0, 1).bits.size() == 0);
    }
}

TEST_CASE("end-to-end key generation") {
    KeygenScenario sc;
    sc.K = 2000;
    sc.pair = select_pairs(2.289, 2.125).front();  // (1/4, 512)

    SECTION("reference scenario produces a key with Eve locked out") {
        const KeygenResult res = end_to_end_keygen(sc);
        REQUIRE(res.report.success);
        CHECK(res.report.forward.user_gate);
        CHECK(res.report.reverse.user_gate);
        CHECK_FALSE(res.report.forward.eve_gate);
        CHECK_FALSE(res.report.reverse.eve_gate);
        CHECK(res.report.rbar == Approx(0.1636381891).margin(1e-7));
        CHECK(res.report.key_bits == key_length(sc.K, res.report.rbar));
        CHECK(res.key.bits.size() == res.report.key_bits);
        CHECK(res.key.declared_rate == res.report.rbar);
        CHECK(res.report.payload_bits == 2000ull * 9 / 4);
        // Both sessions share the weight and the legitimate capacity.
        CHECK(res.report.forward.cap_user == Approx(res.report.reverse.cap_user).epsilon(1e-12));

        const KeygenResult again = end_to_end_keygen(sc);
        CHECK(again.key.bits == res.key.bits);
    }
    SECTION("an off-center eavesdropper can decode one direction, key is still sized safely") {
        sc.geometry.d = 0.25;
        const KeygenResult res = end_to_end_keygen(sc);
        REQUIRE(res.report.success);
        CHECK(res.report.forward.eve_gate);        // Eve hears the probe leg too well
        CHECK_FALSE(res.report.reverse.eve_gate);  // but not in the mirrored session
        CHECK(res.report.key_bits == key_length(sc.K, res.report.rbar));
        // Worst-case sizing does not depend on the actual position.
        CHECK(res.report.rbar == Approx(0.1636381891).margin(1e-7));
    }
    SECTION("a code pair the legitimate side cannot decode fails explicitly") {
        sc.pair = CodePair{Rational(9, 10), 1024, 10, 0.0, 0.0};  // 9 bits/sample needed
        const KeygenResult res = end_to_end_keygen(sc);
        CHECK_FALSE(res.report.success);
        CHECK_FALSE(res.report.failure.empty());
        CHECK(res.key.bits.size() == 0);
    }
    SECTION("input validation") {
        sc.K = 0;
        CHECK_THROWS_AS(end_to_end_keygen(sc), std::invalid_argument);
        sc.K = 100;
        sc.pair = CodePair{};
        CHECK_THROWS_AS(end_to_end_keygen(sc), std::invalid_argument);
    }
}
