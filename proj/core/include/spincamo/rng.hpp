#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace spincamo {

// Portable seeded randomness. Everything that must replay bit-for-bit across
// platforms (gate selection, oracle noise, delay sampling) goes through this
// generator rather than <random>, whose distributions are not pinned by the
// standard. The algorithm identifier below is recorded in serialized
// selection records.
inline constexpr const char* kRngAlgorithm = "splitmix64-fisher-yates-v1";

inline uint64_t splitmix64_next(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Stateless finalizer, used to derive independent streams from (seed, lane)
/// tuples without one lane perturbing another.
inline uint64_t mix64(uint64_t x) {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) {
    return mix64(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
}

inline double to_unit_double(uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;  // [0, 1)
}

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() { return splitmix64_next(state_); }

    /// Unbiased integer in [0, n) by rejection.
    uint64_t below(uint64_t n) {
        const uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    double unit() { return to_unit_double(next()); }

    bool chance(double p) { return unit() < p; }

    /// Standard normal via Box-Muller; spare value cached for determinism.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = unit();
        double u2 = unit();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Fisher-Yates partial shuffle: after the call, v[0..m) is a uniform
    /// sample without replacement.
    template <typename T>
    void partial_shuffle(std::vector<T>& v, size_t m) {
        const size_t n = v.size();
        if (m > n) m = n;
        for (size_t i = 0; i < m; ++i) {
            size_t j = i + static_cast<size_t>(below(n - i));
            std::swap(v[i], v[j]);
        }
    }

private:
    uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace spincamo
