#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace sparse_regret {

// Deterministic pseudo-random stream. Identical (seed, stream_id) pairs
// reproduce identical draw sequences bit for bit on every platform:
// mt19937_64 is fully specified by the standard and the floating point
// draws below avoid std distributions, which are not.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id), gen_(mix(seed, stream_id)) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1), 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Unbiased integer in [0, n) by rejection sampling.
    std::uint64_t uniform_below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
        const std::uint64_t threshold = (std::uint64_t(0) - n) % n; // 2^64 mod n
        std::uint64_t v = next_u64();
        while (v < threshold) v = next_u64();
        return v % n;
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Decorrelates nearby (seed, stream_id) pairs before seeding.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream_id) {
        return splitmix64(splitmix64(seed) ^ splitmix64(stream_id ^ 0x6a09e667f3bcc909ULL));
    }

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 gen_;
};

} // namespace sparse_regret
