#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace pae {

// SplitMix64 finalizer (Steele, Lea & Flood; public domain reference code).
// Used only to derive seeds, never as the trajectory stream.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Documented seed-derivation rule: finalize the master seed, then absorb
// each index in order through one more finalizer round. Replicas and sweep
// cells get mix_seed(master, {i, j, ...}); the mapping is injective enough
// for ensemble work and is order-dependent by construction.
inline std::uint64_t mix_seed(std::uint64_t master,
                              std::initializer_list<std::uint64_t> indices) {
    std::uint64_t s = splitmix64(master);
    for (std::uint64_t idx : indices) {
        s = splitmix64(s ^ (idx + 0x9e3779b97f4a7c15ULL));
    }
    return s;
}

// The single pseudo-random stream behind every trajectory: std::mt19937_64
// seeded directly with the 64-bit seed, mapped to [0,1) by keeping the top
// 53 bits. Seeding and the engine's output sequence are exactly specified
// by the standard, so a (p, t, seed) triple replays bit-identically.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0,1), 53-bit resolution, never returns 1.0
    double next_uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace pae
