#include "extensor/prf.hpp"

#include <cstring>

namespace extensor {
namespace {

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t prf64(std::uint64_t seed, std::span<const std::uint8_t> tag) {
  std::uint64_t state = mix(seed ^ 0x5851f42d4c957f2dULL);
  std::size_t i = 0;
  for (; i + 8 <= tag.size(); i += 8) {
    std::uint64_t word;
    std::memcpy(&word, tag.data() + i, 8);
    state = mix(state ^ word);
  }
  std::uint64_t tail = 0;
  std::memcpy(&tail, tag.data() + i, tag.size() - i);
  state = mix(state ^ tail ^ (static_cast<std::uint64_t>(tag.size()) << 56));
  return mix(state ^ seed);
}

std::uint64_t prf64(std::uint64_t seed, std::initializer_list<std::uint64_t> words) {
  return prf64(seed, std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(words.begin()),
                                                   words.size() * sizeof(std::uint64_t)));
}

Gf2mElement prf_sample(const Gf2mField& field, std::uint64_t seed, std::span<const std::uint8_t> tag) {
  return {prf64(seed, tag) & (field.size() - 1)};
}

Gf2mElement prf_sample(const Gf2mField& field, std::uint64_t seed, std::initializer_list<std::uint64_t> words) {
  return {prf64(seed, words) & (field.size() - 1)};
}

}  // namespace extensor
