#pragma once

#include <cstdint>
#include <vector>

namespace lawmine {

// Deterministic RNG with a fixed algorithm (splitmix64) so that seeded runs
// produce byte-identical outputs on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, bound), bound > 0. Rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + (std::int64_t)below((std::uint64_t)(hi - lo) + 1);
    }

    double unit() { return (next() >> 11) * (1.0 / 9007199254740992.0); }

    bool chance(double p) { return unit() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = (std::size_t)below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    // Fork a decorrelated stream, e.g. one per generation block.
    Rng fork(std::uint64_t salt) {
        Rng r(state_ ^ (salt * 0xda942042e4dd58b5ULL + 0x9e3779b97f4a7c15ULL));
        r.next();
        return r;
    }

private:
    std::uint64_t state_;
};

}  // namespace lawmine
