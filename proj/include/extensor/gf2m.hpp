#pragma once

#include <cstdint>
#include <vector>

namespace extensor {

/// Element of GF(2^d): a polynomial over GF(2) of degree < d, one bit per coefficient.
struct Gf2mElement {
  std::uint64_t bits = 0;

  friend bool operator==(Gf2mElement, Gf2mElement) = default;
};

/// Binary extension field GF(2^d) for 2 <= d <= 63.
///
/// The modulus is checked with Rabin's irreducibility test on construction. Fields of
/// degree up to 20 precompute log/antilog tables over a primitive element; larger fields
/// fall back to shift-and-reduce multiplication.
class Gf2mField {
 public:
  static constexpr unsigned kMinDegree = 2;
  static constexpr unsigned kMaxDegree = 63;
  static constexpr unsigned kDefaultDegree = 16;

  /// Uses the numerically smallest irreducible modulus of the given degree.
  explicit Gf2mField(unsigned degree = kDefaultDegree);
  /// `modulus` includes the leading x^degree term, e.g. 0x11B for x^8+x^4+x^3+x+1.
  Gf2mField(unsigned degree, std::uint64_t modulus);

  unsigned degree() const { return degree_; }
  std::uint64_t modulus() const { return modulus_; }
  /// Number of field elements, 2^d.
  std::uint64_t size() const { return std::uint64_t{1} << degree_; }

  Gf2mElement zero() const { return {}; }
  Gf2mElement one() const { return {1}; }
  /// Embeds a bit pattern; throws DomainError unless bits < 2^d.
  Gf2mElement element(std::uint64_t bits) const;

  Gf2mElement add(Gf2mElement a, Gf2mElement b) const { return {a.bits ^ b.bits}; }
  Gf2mElement mul(Gf2mElement a, Gf2mElement b) const;
  Gf2mElement square(Gf2mElement a) const { return mul(a, a); }
  Gf2mElement pow(Gf2mElement a, std::uint64_t e) const;
  /// Throws DomainError on zero.
  Gf2mElement inv(Gf2mElement a) const;

  /// dst[i] += src[i] * c for i < count; the hot loop of walk propagation.
  void axpy(Gf2mElement* dst, const Gf2mElement* src, std::size_t count, Gf2mElement c) const;

  /// Rabin's test. The degree is the position of the top set bit.
  static bool is_irreducible(std::uint64_t poly);
  static std::uint64_t find_irreducible(unsigned degree);
  /// Smallest degree with 2^d >= max(100k, codes).
  static unsigned required_degree(unsigned k, std::uint64_t codes);

 private:
  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const;
  void build_tables();

  unsigned degree_;
  std::uint64_t modulus_;
  bool tables_ = false;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

}  // namespace extensor
