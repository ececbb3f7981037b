#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>

namespace rsstilt {

struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  friend bool operator==(const RngSeed&, const RngSeed&) = default;
};

namespace detail {

// SplitMix64 finalizer (Steele, Lea & Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

// Order-sensitive hash of a list of words; used to derive independent
// substream states from (seed, stream_id, indices...).
constexpr std::uint64_t hash_words(std::initializer_list<std::uint64_t> words) noexcept {
  std::uint64_t h = 0x6a09e667f3bcc908ULL;
  for (std::uint64_t w : words) {
    h = detail::mix64(h ^ detail::mix64(w + 0x9e3779b97f4a7c15ULL));
  }
  return h;
}

// Small-state generator so a fresh substream costs one hash. Satisfies
// UniformRandomBitGenerator, so it plugs into <random> distributions.
class Engine {
 public:
  using result_type = std::uint64_t;

  explicit Engine(std::uint64_t state) noexcept : state_(state) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return detail::mix64(state_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

template <class... Indices>
Engine substream(const RngSeed& seed, Indices... indices) {
  return Engine(hash_words({seed.seed, seed.stream_id, static_cast<std::uint64_t>(indices)...}));
}

// Child seed for a nested component (replication, resample index, ...).
template <class... Indices>
RngSeed child_seed(const RngSeed& seed, Indices... indices) {
  return RngSeed{seed.seed, hash_words({seed.stream_id, static_cast<std::uint64_t>(indices)...})};
}

}  // namespace rsstilt
