#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "extensor/kpath_oracle.hpp"
#include "extensor/undirected_oracle.hpp"

namespace extensor {

/// Binary container: "XTNO", u16 format version, mode byte, then the state body.
/// Multi-byte fields are little-endian. Field coefficients take ceil(d/8) bytes; integers are a
/// u32 byte count followed by minimal two's complement.
inline constexpr std::uint16_t kFormatVersion = 1;

enum class StateKind : std::uint8_t {
  kRandomized = 1,
  kDeterministic = 2,
  kUndirected = 3,
};

std::vector<std::uint8_t> serialize(const RandomizedState& state);
std::vector<std::uint8_t> serialize(const DeterministicState& state);
std::vector<std::uint8_t> serialize(const AnyKPathState& state);
std::vector<std::uint8_t> serialize(const UndirectedOracle& oracle);

/// Reads the header; throws FormatError or VersionError.
StateKind peek_kind(const std::vector<std::uint8_t>& bytes);

AnyKPathState deserialize_kpath(const std::vector<std::uint8_t>& bytes);
UndirectedOracle deserialize_undirected(const std::vector<std::uint8_t>& bytes);

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> read_file(const std::string& path);

}  // namespace extensor
