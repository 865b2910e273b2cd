#pragma once

#include "e8cat/scalar.hpp"

#include <cstdint>

namespace e8cat {

/// splitmix64; self-contained so that seeded runs are bit-identical across
/// platforms (std:: distributions are not).
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n); modulo bias is irrelevant for test
    /// sampling purposes.
    uint64_t below(uint64_t n) { return next() % n; }

    long int_in(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    Rat rational(long max_abs_num = 9, long max_den = 7) {
        long num = int_in(-max_abs_num, max_abs_num);
        long den = int_in(1, max_den);
        return rat(num, den);
    }

    ExactScalar scalar(long max_abs_num = 9, long max_den = 7) {
        return ExactScalar(rational(max_abs_num, max_den), rational(max_abs_num, max_den));
    }

  private:
    uint64_t state_;
};

}  // namespace e8cat
