#pragma once

#include "cutlab/rational.hpp"

#include <cstdint>
#include <random>

namespace cutlab {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-task seed derivation: independent streams from one master seed.
inline std::uint64_t task_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 0x51ed270b7a04a1ULL));
}

// mt19937_64 raw output is pinned by the standard; bounded draws use rejection
// so reports are byte-identical across platforms (std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // uniform on [0, bound), bound >= 1
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
      std::uint64_t v = eng_();
      if (v < limit) return v % bound;
    }
  }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (eng_() & 1) != 0; }

  // uniform rational in [0, 1) with denominator 2^64, for exact threshold tests
  Rational unit() {
    mpz_class num(0);
    std::uint64_t v = eng_();
    mpz_import(num.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    mpz_class den(1);
    den <<= 64;
    return Rational(num, den);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cutlab
