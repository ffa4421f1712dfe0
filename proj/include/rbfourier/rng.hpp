#ifndef RBFOURIER_RNG_HPP_
#define RBFOURIER_RNG_HPP_

#include <cstdint>

namespace rbf {

// SplitMix64 stream.  Substreams are derived by hashing (seed, id pair), so
// every (length, sequence) pair in a Monte Carlo run owns an independent
// stream and results do not depend on evaluation order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) via 128-bit multiply-shift; exact enough for n << 2^32
  // and identical on every platform that has __uint128_t.
  std::uint32_t next_below(std::uint32_t n) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  double next_double() {  // uniform in [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  SplitMix64 g(seed);
  std::uint64_t s = g.next() ^ (a * 0xD6E8FEB86659FD93ull);
  SplitMix64 h(s);
  return h.next() ^ (b * 0xCA5A826395121157ull);
}

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return SplitMix64(mix_seed(seed, a, b));
}

}  // namespace rbf

#endif  // RBFOURIER_RNG_HPP_
