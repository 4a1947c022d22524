#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>

namespace frob {

/// Uniform draw from [0, n) by mask-and-reject over the raw mt19937_64
/// stream.  Unlike std::uniform_int_distribution, whose algorithm is
/// implementation-defined, this produces the same sequence for a given
/// seed on every standard library.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) {
        throw std::domain_error("bounded_draw: empty range");
    }
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
        const std::uint64_t v = rng() & mask;
        if (v < n) {
            return v;
        }
    }
}

/// Rejection sampler for sorted triples 1 < x < y < z with all three
/// values in [lo, hi] and pairwise coprime.  Deterministic per seed.
class TripleSampler {
public:
    TripleSampler(std::uint64_t seed, std::uint64_t lo, std::uint64_t hi)
        : rng_(seed), lo_(lo), hi_(hi) {
        if (lo_ < 2 || hi_ < lo_ + 2) {
            throw std::domain_error("TripleSampler: range cannot hold a sorted triple above 1");
        }
    }

    std::array<std::uint64_t, 3> next() {
        const std::uint64_t span = hi_ - lo_ + 1;
        for (;;) {
            std::array<std::uint64_t, 3> v{lo_ + bounded_draw(rng_, span),
                                           lo_ + bounded_draw(rng_, span),
                                           lo_ + bounded_draw(rng_, span)};
            std::sort(v.begin(), v.end());
            if (v[0] == v[1] || v[1] == v[2]) {
                continue;
            }
            if (std::gcd(v[0], v[1]) != 1 || std::gcd(v[0], v[2]) != 1 ||
                std::gcd(v[1], v[2]) != 1) {
                continue;
            }
            return v;
        }
    }

private:
    std::mt19937_64 rng_;
    std::uint64_t lo_;
    std::uint64_t hi_;
};

}  // namespace frob
