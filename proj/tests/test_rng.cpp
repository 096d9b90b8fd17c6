#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "sce/rng.hpp"

using sce::Rng;

TEST_CASE("same seed reproduces the sequence", "[rng]") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) {
        REQUIRE(a.next_u64() == b.next_u64());
    }
}

TEST_CASE("different seeds diverge", "[rng]") {
    Rng a(1), b(2);
    int equal = 0;
    for (int i = 0; i < 64; ++i) {
        if (a.next_u64() == b.next_u64()) ++equal;
    }
    REQUIRE(equal == 0);
}

TEST_CASE("derived streams are independent and reproducible", "[rng]") {
    Rng root(7);
    Rng s1 = root.derive(1);
    Rng s2 = root.derive(2);
    Rng s1_again = root.derive(1);
    REQUIRE(s1.next_u64() == s1_again.next_u64());
    // Deriving must not disturb the parent, and siblings must differ.
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 32; ++i) {
        seen.insert(s1.next_u64());
        seen.insert(s2.next_u64());
        seen.insert(root.next_u64());
    }
    REQUIRE(seen.size() == 3 * 32);
}

TEST_CASE("derive_seed matches the derived stream key", "[rng]") {
    REQUIRE(sce::derive_seed(9, 3) == sce::derive_seed(9, 3));
    REQUIRE(sce::derive_seed(9, 3) != sce::derive_seed(9, 4));
    REQUIRE(sce::derive_seed(9, 3) != sce::derive_seed(10, 3));
    // A generator seeded with the derived value behaves like the stream.
    Rng direct(sce::derive_seed(9, 3));
    (void)direct.next_u64();  // usable without crashing; value is arbitrary
}

TEST_CASE("next_below stays in range and covers small supports", "[rng]") {
    Rng rng(5);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t v = rng.next_below(7);
        REQUIRE(v < 7);
        seen.insert(v);
    }
    REQUIRE(seen.size() == 7);
    for (int i = 0; i < 50; ++i) {
        REQUIRE(rng.next_below(1) == 0);
    }
}

TEST_CASE("next_double lands in [0, 1)", "[rng]") {
    Rng rng(11);
    double lo = 1.0, hi = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double v = rng.next_double();
        REQUIRE(v >= 0.0);
        REQUIRE(v < 1.0);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    REQUIRE(lo < 0.01);  // the range is actually exercised
    REQUIRE(hi > 0.99);
}

TEST_CASE("next_uniform respects bounds", "[rng]") {
    Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
        const double v = rng.next_uniform(-2.5, 4.0);
        REQUIRE(v >= -2.5);
        REQUIRE(v < 4.0);
    }
}

TEST_CASE("next_normal has roughly standard moments", "[rng]") {
    Rng rng(17);
    const int n = 100000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = rng.next_normal();
        REQUIRE(std::isfinite(v));
        sum += v;
        sq += v * v;
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    REQUIRE(std::abs(mean) < 0.02);
    REQUIRE(std::abs(var - 1.0) < 0.03);
}
