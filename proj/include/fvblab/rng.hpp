#ifndef FVBLAB_RNG_HPP_
#define FVBLAB_RNG_HPP_

#include <cstdint>

#include "fvblab/params.hpp"
#include "fvblab/scalars.hpp"

namespace fvblab {

// splitmix64: tiny, seedable, reproducible across platforms
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // fresh generator for an independent, order-insensitive substream
  Rng fork(std::uint64_t tag) {
    return Rng(next() ^ (tag * 0x9e3779b97f4a7c15ULL));
  }

  // numerator in [-20, 20], denominator in [1, 8]
  Rat rat() {
    long n = long(below(41)) - 20;
    long d = long(below(8)) + 1;
    return Rat(n, d);
  }

  Rat nonzero_rat() {
    while (true) {
      Rat r = rat();
      if (!r.is_zero())
        return r;
    }
  }
};

}  // namespace fvblab

#endif
