// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef HAMFORGE_RNG_HPP
#define HAMFORGE_RNG_HPP

#include <cstdint>
#include <vector>

namespace hamforge {

// splitmix64 step. Fully specified so that seeded results are identical on
// every platform (std::shuffle and the distributions are not).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Minimal deterministic RNG built on splitmix64.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform integer in [0, bound) via rejection (no modulo bias).
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do { x = next_u64(); } while (x >= limit);
    return x % bound;
  }

  // Uniform double in [0, 1) with 53 bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform double in [-1, 1].
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  std::uint64_t state_;
};

// Derives a child seed from a master seed and a stream tag; used for
// per-sample seeds in sweeps (documented in the README).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
  std::uint64_t s = master;
  std::uint64_t a = splitmix64(s);
  s = a ^ tag;
  return splitmix64(s);
}

}  // namespace hamforge

#endif
