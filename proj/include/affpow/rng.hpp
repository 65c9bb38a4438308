#ifndef AFFPOW_RNG_HPP
#define AFFPOW_RNG_HPP

#include <cstdint>

namespace affpow {

// Counter-based deterministic generator: every output is a stateless mix of
// (seed, stream, counter), so parallel trials keyed by (seed, trial-index)
// are order-independent and bit-reproducible across platforms.
class DeterministicRng {
public:
    DeterministicRng(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream) {}

    std::uint64_t next() {
        // splitmix64 finalizer over the keyed counter
        std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (counter_++ + 1) +
                          0xbf58476d1ce4e5b9ULL * (stream_ + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

}  // namespace affpow

#endif
