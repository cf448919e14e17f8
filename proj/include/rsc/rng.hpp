#pragma once

#include <cstdint>

namespace rsc {

/// splitmix64; used both as a mixer for stream derivation and as the
/// per-trial generator. Output streams depend only on (seed, stream index),
/// never on thread scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// true with probability threshold/2^64 (integer compare, no floats)
    bool bernoulli(std::uint64_t threshold) { return next() < threshold; }

    /// uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        // rejection-free modulo is fine here; n is tiny relative to 2^64
        return next() % n;
    }

private:
    std::uint64_t state_;
};

/// Derives an independent stream for (master seed, index) pairs.
inline Rng derive_stream(std::uint64_t master_seed, std::uint64_t index) {
    Rng mix(master_seed ^ (0x632be59bd9b4e019ull * (index + 1)));
    std::uint64_t s = mix.next();
    s ^= mix.next() << 1;
    return Rng(s);
}

} // namespace rsc
