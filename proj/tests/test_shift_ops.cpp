#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <matchspectrum/shift_ops.hpp>

#include "oracles.hpp"

using namespace matchspectrum;

namespace {

WeightDistribution dist(std::initializer_list<long> values) {
    WeightDistribution w;
    for (long v : values) w.counts.emplace_back(v);
    return w;
}

// random distribution whose support sits in the middle of [0, m], leaving
// `margin` slots of headroom on both sides
WeightDistribution random_centered(std::mt19937_64& rng, int m, int margin) {
    auto w = WeightDistribution::zeros(m);
    for (int i = margin; i <= m - margin; ++i) w.counts[i] = static_cast<long>(rng() % 10);
    return w;
}

ShiftSequence random_seq(std::mt19937_64& rng, int len, int amp) {
    ShiftSequence s(len);
    for (int& v : s) v = static_cast<int>(rng() % (2 * amp + 1)) - amp;
    return s;
}

}  // namespace

TEST_CASE("sigma basics") {
    auto w = dist({1, 2, 3});
    CHECK(sigma(w, 0) == w);
    CHECK(sigma(dist({1, 0, 0}), 2) == dist({0, 0, 1}));
    CHECK(sigma(dist({0, 1, 0}), -1) == dist({1, 0, 0}));

    SECTION("out-of-range shift amount is rejected") {
        CHECK_THROWS_AS(sigma(w, 3), std::invalid_argument);
        CHECK_THROWS_AS(sigma(w, -3), std::invalid_argument);
    }

    SECTION("unchecked truncation drops mass, checked raises") {
        CHECK(sigma(dist({0, 0, 1}), 1) == dist({0, 0, 0}));
        CHECK_THROWS_AS(sigma(dist({0, 0, 1}), 1, /*checked=*/true), IntegrityError);
        CHECK_THROWS_AS(sigma(dist({1, 0, 0}), -1, /*checked=*/true), IntegrityError);
        CHECK_NOTHROW(sigma(dist({0, 1, 0}), 1, /*checked=*/true));
    }
}

TEST_CASE("shift basics") {
    auto w = dist({3, 1, 4, 1});
    CHECK(shift(w, {}) == w);
    CHECK(shift(dist({1, 0, 0, 0}), {1, 1}) == dist({1, 2, 1, 0}));
    CHECK(shift(dist({0, 1}), {-1}) == dist({1, 1}));

    SECTION("mass doubles per step") {
        std::mt19937_64 rng(3);
        auto v = random_centered(rng, 20, 8);
        auto seq = random_seq(rng, 5, 1);
        CHECK(shift(v, seq).mass() == v.mass() * 32);
    }

    SECTION("op report counts one sigma and one addition per step") {
        OpReport rep;
        shift(dist({1, 0, 0, 0}), {1, 1, -1}, false, &rep);
        CHECK(rep.sigma_applications == 3);
        CHECK(rep.vector_additions == 3);
    }
}

TEST_CASE("shift matches the naive reference on both count types") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 16;
        std::vector<long long> w(m + 1);
        for (auto& x : w) x = static_cast<long long>(rng() % 7);
        auto seq = random_seq(rng, 1 + static_cast<int>(rng() % 4), 2);

        CHECK(shift_vec(w, seq) == oracles::naive_shift(w, seq));

        std::vector<BigInt> wb;
        for (long long x : w) wb.emplace_back(static_cast<long>(x));
        auto big = shift_vec(wb, seq);
        auto ref = oracles::naive_shift(wb, seq);
        CHECK(big == ref);
    }
}

TEST_CASE("shift is a commutative linear transformation") {
    std::mt19937_64 rng(37);
    const int m = 48;
    for (int trial = 0; trial < 200; ++trial) {
        auto w1 = random_centered(rng, m, 22);
        auto w2 = random_centered(rng, m, 22);
        auto l1 = random_seq(rng, 1 + static_cast<int>(rng() % 4), 2);
        auto l2 = random_seq(rng, 1 + static_cast<int>(rng() % 4), 2);
        int x = static_cast<int>(rng() % 7) - 3;

        // commutation with sigma
        CHECK(sigma(shift(w1, l1, true), x, true) == shift(sigma(w1, x, true), l1, true));

        // concatenation
        ShiftSequence cat = l1;
        cat.insert(cat.end(), l2.begin(), l2.end());
        CHECK(shift(shift(w1, l1, true), l2, true) == shift(w1, cat, true));

        // additivity
        CHECK(sigma(w1 + w2, x, true) == sigma(w1, x, true) + sigma(w2, x, true));
        CHECK(shift(w1 + w2, l1, true) == shift(w1, l1, true) + shift(w2, l1, true));
    }
}
