#ifndef KRON_RNG_HPP_
#define KRON_RNG_HPP_

#include <cstdint>
#include <limits>

namespace kron {

// 64-bit seed plus a stream key naming an independent substream. Child
// streams are derived by hashing, so (seed, path of labels) always maps to
// the same random sequence regardless of which thread consumes it.
class SeedSpec {
 public:
  constexpr SeedSpec() = default;
  explicit constexpr SeedSpec(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  [[nodiscard]] constexpr std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] constexpr std::uint64_t stream() const noexcept {
    return stream_;
  }

  // Substream `label` of this stream (e.g. trial index, row block, class).
  [[nodiscard]] SeedSpec child(std::uint64_t label) const noexcept;

  bool operator==(const SeedSpec&) const = default;

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
};

// SplitMix64 finalizer.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based generator: the i-th output is a pure function of
// (key, i). Satisfies UniformRandomBitGenerator so it plugs into the
// <random> distributions.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(SeedSpec spec) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    counter_ += 0x9e3779b97f4a7c15ULL;
    return mix64(key_ + counter_);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace kron

#endif  // KRON_RNG_HPP_
