#pragma once

#include <cstdint>

namespace egogrid {

// SplitMix64: tiny counter-style generator with a single u64 of state.
// Sequential seeds produce well-scrambled first draws, which matters because
// episode seeds are often 0,1,2,... The full state is one word, so it
// serializes trivially with the game state.
class SplitMix64 {
public:
    SplitMix64() = default;
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, n). Lemire multiply-shift; bias is < 2^-64 * n,
    // irrelevant for game-sized n.
    uint32_t below(uint32_t n) {
        return static_cast<uint32_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    uint64_t state() const { return state_; }
    void set_state(uint64_t s) { state_ = s; }

private:
    uint64_t state_ = 0;
};

// Stateless mix of several words into one seed, for deriving per-level or
// per-episode substreams from a base seed.
inline uint64_t mix_seed(uint64_t a, uint64_t b = 0, uint64_t c = 0) {
    SplitMix64 g(a);
    uint64_t s = g.next();
    g.set_state(s ^ (b + 0x9E3779B97F4A7C15ull));
    s = g.next();
    g.set_state(s ^ (c + 0xD1B54A32D192ED03ull));
    return g.next();
}

}  // namespace egogrid
