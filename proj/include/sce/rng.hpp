#pragma once

#include <cmath>
#include <cstdint>

namespace sce {

/// Counter-based pseudo-random generator built on the splitmix64 finalizer.
///
/// Every draw is a pure function of (key, counter), so independent streams
/// can be derived for each sampling purpose and the draw sequence never
/// depends on evaluation order elsewhere in the program.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(mix(seed ^ kKeyTweak)) {}

    /// Derive an independent stream. Streams with different ids never
    /// collide in practice (distinct keys under the mix function).
    Rng derive(std::uint64_t stream_id) const {
        Rng r(0);
        r.key_ = mix(key_ ^ mix(stream_id + kStreamTweak));
        r.counter_ = 0;
        return r;
    }

    std::uint64_t next_u64() { return mix(key_ + kGolden * ++counter_); }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in (lo, hi).
    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Standard normal deviate via Box-Muller; caches the second value.
    double next_normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = next_double();
        if (u1 < 1e-300) u1 = 1e-300;
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
    static constexpr std::uint64_t kKeyTweak = 0x5ce5ce5ce5ce5ce5ull;
    static constexpr std::uint64_t kStreamTweak = 0x6a09e667f3bcc908ull;

    static std::uint64_t mix(std::uint64_t x) {
        x += kGolden;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;

    friend std::uint64_t derive_seed(std::uint64_t, std::uint64_t);
};

/// Deterministic sub-seed for functions that take a plain seed argument.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_id) {
    return Rng(seed).derive(stream_id).key_;
}

}  // namespace sce
