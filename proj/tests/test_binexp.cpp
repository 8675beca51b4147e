#include "doctest.h"

#include <algorithm>
#include <set>

#include "grcup/binexp.hpp"
#include "support/oracles.hpp"

using namespace grcup;

namespace {

BitString bs(std::initializer_list<std::uint8_t> raw) {
    return BitString(std::vector<std::uint8_t>(raw));
}

}  // namespace

TEST_CASE("bits produces the big-endian expansion") {
    CHECK(bits(31, 5) == bs({1, 1, 1, 1, 1}));
    CHECK(bits(0, 3) == bs({0, 0, 0}));
    CHECK(bits(6, 3) == bs({1, 1, 0}));
    CHECK_THROWS_AS(bits(8, 3), std::invalid_argument);
    CHECK(bits(6, 3).value() == 6);
}

TEST_CASE("complement flips every bit") {
    std::uint64_t seed = 0xb17001;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k = 1 + grcup::testing::splitmix64(seed) % 16;
        const std::uint64_t x = grcup::testing::splitmix64(seed) % (std::uint64_t{1} << k);
        CHECK(bits((std::uint64_t{1} << k) - 1 - x, k) == bits(x, k).complement());
    }
}

TEST_CASE("binom_parity against the Pascal-triangle oracle") {
    CHECK(binom_parity(17, 0) == 1);
    CHECK(binom_parity(4, 2) == 0);
    CHECK(binom_parity(3, 2) == 1);
    CHECK(binom_parity(2, 5) == 0);

    const grcup::testing::PascalParity oracle(512);
    for (std::size_t n = 0; n < 512; ++n)
        for (std::size_t k = 0; k <= n; ++k) REQUIRE(binom_parity(n, k) == oracle.at(n, k));
}

TEST_CASE("delta membership at length two, derived from S_2 via Lucas") {
    // Independent route: enumerate S_2 with the Pascal oracle, map through
    // p = 3s - 6, and read off which length-2 patterns must be members.
    const grcup::testing::PascalParity oracle(16);
    std::set<std::uint64_t> expected;
    for (std::int64_t s = 2; s <= 3; ++s)
        if (oracle.at(static_cast<std::size_t>(s), static_cast<std::size_t>(3 * s - 6)))
            expected.insert(static_cast<std::uint64_t>(3 * s - 6));
    REQUIRE(expected == std::set<std::uint64_t>{0, 3});

    for (std::uint64_t v = 0; v < 4; ++v)
        CHECK(delta_member(bits(v, 2)) == (expected.count(v) == 1));
}

TEST_CASE("delta basics") {
    CHECK(delta_member(BitString{}));
    for (std::size_t k = 1; k <= 10; ++k)
        CHECK(delta_member(bits((std::uint64_t{1} << k) - 1, k)));
    CHECK_FALSE(delta_member(bs({0, 1})));
    CHECK_FALSE(delta_member(bs({1, 0})));
}

TEST_CASE("delta_enumerate matches the member predicate and Fibonacci counts") {
    const DeltaSet d2 = delta_enumerate(2);
    REQUIRE(d2.members.size() == 2);
    CHECK(d2.members[0] == bs({0, 0}));
    CHECK(d2.members[1] == bs({1, 1}));
    CHECK(delta_enumerate(0).members.size() == 1);

    const std::size_t expected[] = {1, 1, 2, 3, 5, 8, 13};
    for (std::size_t k = 0; k < 7; ++k) CHECK(delta_enumerate(k).members.size() == expected[k]);

    // Fibonacci recurrence further out.
    for (std::size_t k = 2; k <= 20; ++k)
        CHECK(delta_values(k).size() == delta_values(k - 1).size() + delta_values(k - 2).size());

    // Exhaustive agreement with the recursion-based predicate.
    for (std::size_t k = 0; k <= 10; ++k) {
        const auto values = delta_values(k);
        std::set<std::uint64_t> vs(values.begin(), values.end());
        CHECK(std::is_sorted(values.begin(), values.end()));
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v)
            CHECK(delta_member(bits(v, k)) == (vs.count(v) == 1));
    }
}

TEST_CASE("prepending or appending 1 stays inside delta") {
    for (std::size_t k = 0; k <= 14; ++k) {
        for (std::uint64_t v : delta_values(k)) {
            CHECK(delta_member(bits((std::uint64_t{1} << k) | v, k + 1)));
            CHECK(delta_member(bits((v << 1) | 1, k + 1)));
        }
    }
}

TEST_CASE("delta splits as a disjoint union by the leading bits") {
    for (std::size_t m = 2; m <= 14; ++m) {
        std::set<std::uint64_t> rebuilt;
        for (std::uint64_t v : delta_values(m - 1)) rebuilt.insert((std::uint64_t{1} << (m - 1)) | v);
        const std::size_t top_count = rebuilt.size();
        for (std::uint64_t v : delta_values(m - 2)) rebuilt.insert(v);
        // Disjoint: the second block never collides with the first.
        CHECK(rebuilt.size() == top_count + delta_values(m - 2).size());
        const auto direct = delta_values(m);
        CHECK(rebuilt == std::set<std::uint64_t>(direct.begin(), direct.end()));
    }
}

TEST_CASE("S and S' sets at the base level") {
    CHECK(s_set(2) == std::vector<std::int64_t>{2, 3});
    CHECK(s_prime_set(2) == std::vector<std::int64_t>{3});
    CHECK_THROWS_AS(s_set(1), std::invalid_argument);
    for (int k = 2; k <= 12; ++k) {
        for (std::int64_t s : s_set(k)) CHECK(((s >> (k - 1)) & 1) == 1);
        CHECK_FALSE(s_set(k).empty());
    }
}

TEST_CASE("P sets and their bit-pattern characterizations") {
    CHECK(p_set(2) == std::vector<std::int64_t>{0, 3});
    CHECK(p_prime_set(2) == std::vector<std::int64_t>{2});

    // Two independent constructions of the same set: Lucas enumeration via
    // S_m versus the delta recursion.
    for (int m = 2; m <= 10; ++m) {
        const auto by_s = p_set(m);
        const auto by_delta = delta_values(static_cast<std::size_t>(m));
        REQUIRE(by_s.size() == by_delta.size());
        for (std::size_t idx = 0; idx < by_s.size(); ++idx)
            CHECK(by_s[idx] == static_cast<std::int64_t>(by_delta[idx]));
    }
    // P'_m appends a zero bit to the delta members one level down.
    for (int m = 2; m <= 10; ++m) {
        const auto by_s = p_prime_set(m);
        const auto lower = delta_values(static_cast<std::size_t>(m - 1));
        REQUIRE(by_s.size() == lower.size());
        for (std::size_t idx = 0; idx < by_s.size(); ++idx)
            CHECK(by_s[idx] == static_cast<std::int64_t>(lower[idx] << 1));
    }
}

TEST_CASE("s -> 2s+1 maps S_{m-1} onto S'_m") {
    for (int m = 3; m <= 10; ++m) {
        std::vector<std::int64_t> mapped;
        for (std::int64_t s : s_set(m - 1)) mapped.push_back(2 * s + 1);
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == s_prime_set(m));
    }
}
