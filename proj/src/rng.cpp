#include "kron/rng.hpp"

namespace kron {

SeedSpec SeedSpec::child(std::uint64_t label) const noexcept {
  return SeedSpec(seed_, mix64(stream_ * 0x9e3779b97f4a7c15ULL +
                               mix64(label + 0x632be59bd9b4e019ULL)));
}

CounterRng::CounterRng(SeedSpec spec) noexcept
    : key_(mix64(mix64(spec.seed()) ^ spec.stream())) {}

std::uint64_t CounterRng::below(std::uint64_t bound) noexcept {
  // Lemire's nearly divisionless rejection method.
  unsigned __int128 m =
      static_cast<unsigned __int128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace kron
