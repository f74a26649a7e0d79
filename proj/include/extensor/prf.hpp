#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>

#include "extensor/gf2m.hpp"

namespace extensor {

/// Keyed pseudorandom function: a deterministic 64-bit value for each (seed, tag).
///
/// Edge and vertex variables are derived from their identifiers instead of drawn from an
/// advancing generator, so a value for an edge first seen at query time is the same value a
/// from-scratch preprocessing of the updated graph would use.
std::uint64_t prf64(std::uint64_t seed, std::span<const std::uint8_t> tag);
/// Convenience form hashing a sequence of 64-bit words.
std::uint64_t prf64(std::uint64_t seed, std::initializer_list<std::uint64_t> words);

/// Uniform field element for (seed, tag).
Gf2mElement prf_sample(const Gf2mField& field, std::uint64_t seed, std::span<const std::uint8_t> tag);
Gf2mElement prf_sample(const Gf2mField& field, std::uint64_t seed, std::initializer_list<std::uint64_t> words);

/// Domain-separation constants for PRF tags.
namespace prf_tag {
inline constexpr std::uint64_t kEdge = 0x65646765;        // "edge"
inline constexpr std::uint64_t kVertexCode = 0x76636f64;  // "vcod"
inline constexpr std::uint64_t kVertexVar = 0x76766172;   // "vvar"
inline constexpr std::uint64_t kPartition = 0x70617274;   // "part"
inline constexpr std::uint64_t kSetVar = 0x73657476;      // "setv"
inline constexpr std::uint64_t kSlotVar = 0x736c6f74;     // "slot"
inline constexpr std::uint64_t kTrial = 0x7472696c;       // "tril"
}  // namespace prf_tag

}  // namespace extensor
