#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>

namespace serdiff {

inline std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Derives an independent stream seed from a base seed and a structured path
// (subsystem tag, stage, step, ...). Every random decision in a run pulls
// from its own derived stream, so adding or removing one consumer never
// shifts the draws seen by another.
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = base ^ 0xd1b54a32d192ed03ull;
  std::uint64_t out = splitmix64_next(s);
  for (std::uint64_t p : path) {
    s ^= p * 0x2545f4914f6cdd1dull + 0x9e3779b97f4a7c15ull;
    out = splitmix64_next(s);
  }
  return out;
}

// Deterministic generator with explicit transforms. Normal variates come
// from Box-Muller on 53-bit uniforms rather than std::normal_distribution,
// whose output sequence is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive on both ends; rejection sampling keeps the draw unbiased.
  int uniform_int(int lo, int hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1ull;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x = gen_();
    while (x >= limit) x = gen_();
    return lo + static_cast<int>(x % range);
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0x1.0p-100) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  template <typename RandomIt>
  void shuffle(RandomIt first, RandomIt last) {
    // Fisher-Yates; std::shuffle's sequence is implementation-defined.
    const auto n = last - first;
    for (auto i = n - 1; i > 0; --i) {
      const int j = uniform_int(0, static_cast<int>(i));
      std::swap(first[i], first[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace serdiff
