#pragma once

#include <array>
#include <cstdint>

namespace signet {

/// Purpose tag separating the independent random components of the model.
enum class StreamPurpose : std::uint32_t {
    Arcs = 0,         // interaction set E_t
    Attention = 1,    // Bernoulli pair (B_t, D_t)
    InitialState = 2, // random s(0)
    Scratch = 3       // tests and fuzzing
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace detail

/// Counter-based stream keyed by (seed, run, t, purpose): Philox4x32-10.
///
/// Identical keys yield identical draws on every platform; distinct keys give
/// statistically independent streams with no shared mutable state, so
/// trajectories can be sampled in parallel and replayed exactly.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t run, std::uint64_t t, StreamPurpose purpose) {
        std::uint64_t k = detail::splitmix64(detail::splitmix64(seed) ^ run);
        key_[0] = static_cast<std::uint32_t>(k);
        key_[1] = static_cast<std::uint32_t>(k >> 32);
        counter_[0] = static_cast<std::uint32_t>(t);
        counter_[1] = static_cast<std::uint32_t>(t >> 32);
        counter_[2] = static_cast<std::uint32_t>(purpose);
        counter_[3] = 0; // block index, bumped per refill
    }

    std::uint64_t next_u64() {
        if (available_ == 0) refill();
        return buffer_[--available_];
    }

    /// Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_double() < p; }

    double uniform(double lo, double hi) { return lo + next_double() * (hi - lo); }

    /// Uniform integer in [0, bound), bias-free (rejection sampling).
    std::uint64_t uniform_index(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

private:
    static void philox_round(std::array<std::uint32_t, 4>& ctr,
                             const std::array<std::uint32_t, 2>& key) {
        const std::uint64_t p0 = 0xD2511F53ULL * ctr[0];
        const std::uint64_t p1 = 0xCD9E8D57ULL * ctr[2];
        ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
               static_cast<std::uint32_t>(p1),
               static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
               static_cast<std::uint32_t>(p0)};
    }

    void refill() {
        std::array<std::uint32_t, 4> ctr = counter_;
        std::array<std::uint32_t, 2> key = key_;
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += 0x9E3779B9U;
                key[1] += 0xBB67AE85U;
            }
            philox_round(ctr, key);
        }
        buffer_[0] = (static_cast<std::uint64_t>(ctr[1]) << 32) | ctr[0];
        buffer_[1] = (static_cast<std::uint64_t>(ctr[3]) << 32) | ctr[2];
        available_ = 2;
        ++counter_[3];
    }

    std::array<std::uint32_t, 2> key_{};
    std::array<std::uint32_t, 4> counter_{};
    std::array<std::uint64_t, 2> buffer_{};
    int available_ = 0;
};

} // namespace signet
