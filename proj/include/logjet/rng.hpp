#ifndef LOGJET_RNG_HPP
#define LOGJET_RNG_HPP

#include "logjet/scalar.hpp"

#include <cstdint>

namespace logjet {

// SplitMix64. Self-contained so that seeded runs are byte-identical across
// platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant here.
    long long int_in(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(next_u64() % span);
    }

    bool coin() { return (next_u64() & 1u) != 0; }

    // Random rational with numerator in [-10, 10] and denominator in [1, 10].
    Scalar small_scalar() { return scalar_from(int_in(-10, 10), int_in(1, 10)); }

    Scalar small_nonzero_scalar() {
        for (;;) {
            Scalar s = small_scalar();
            if (s != 0) return s;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace logjet

#endif
