// Deterministic random streams. xoshiro256++ seeded through splitmix64, with
// uniform/exponential draws built from explicit bit manipulation so that the
// same seed reproduces the same sequence on any platform and toolchain.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace rdna {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for replication k of a batch. (k+1)*odd is injective mod 2^64 and
// splitmix64 is a bijection, so distinct k never collide for a fixed base.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k) {
  std::uint64_t s = base ^ (0x9e3779b97f4a7c15ULL * (k + 1));
  return splitmix64_next(s);
}

// Named substreams of one replication. Keeps consumers independent: drawing
// more values for one purpose never shifts another purpose's sequence.
enum class stream : std::uint64_t {
  placement = 1,
  pu_trace = 2,
  monitor = 3,
  d2d = 4,
  reliability = 5,
  walk = 6,
};

inline std::uint64_t substream_seed(std::uint64_t replication_seed, stream which) {
  return derive_seed(replication_seed, static_cast<std::uint64_t>(which));
}

class rng {
 public:
  explicit rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) word = splitmix64_next(x);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1) with 53 significant bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Exponential with the given rate; rate 0 yields +infinity (event never happens).
  double exponential(double rate) {
    if (rate <= 0.0) return std::numeric_limits<double>::infinity();
    return -std::log1p(-uniform()) / rate;
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace rdna
