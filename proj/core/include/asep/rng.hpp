#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace asep {

// splitmix64, used for seed expansion and stream derivation.
struct SplitMix64 {
  std::uint64_t state;

  explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// xoshiro256++ by Blackman and Vigna, state filled from splitmix64.
// Results are identical on every platform, which the coupling and
// replay guarantees rely on; std:: distributions are avoided for the
// same reason.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() { return next(); }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

// Deterministic combination of a master seed with a stream index.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
  SplitMix64 sm(master);
  std::uint64_t a = sm.next();
  SplitMix64 sm2(a ^ (stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
  return sm2.next();
}

// Maps a possibly negative index (bond label) to a stream id.
inline std::uint64_t zigzag64(std::int64_t v) {
  return (static_cast<std::uint64_t>(v) << 1) ^
         static_cast<std::uint64_t>(v >> 63);
}

template <class R>
inline double uniform01(R& rng) {  // [0, 1)
  return static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
}

template <class R>
inline double uniform_pos(R& rng) {  // (0, 1]
  return static_cast<double>((rng.next() >> 11) + 1) * 0x1.0p-53;
}

template <class R>
inline double exponential(R& rng, double rate) {
  return -std::log(uniform_pos(rng)) / rate;
}

// Unbiased up to O(n / 2^64), fine for bond selection.
template <class R>
inline std::uint64_t uniform_below(R& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng.next()) * n) >> 64);
}

}  // namespace asep
