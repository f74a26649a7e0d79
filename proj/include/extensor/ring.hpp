#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>

#include "extensor/bigint.hpp"
#include "extensor/gf2m.hpp"

namespace extensor {

/// Coefficient ring policy over a shared GF(2^d) context.
struct Gf2mRing {
  using value_type = Gf2mElement;
  static constexpr bool kCharacteristicTwo = true;

  std::shared_ptr<const Gf2mField> field;

  Gf2mRing() : field(std::make_shared<const Gf2mField>()) {}
  explicit Gf2mRing(std::shared_ptr<const Gf2mField> f) : field(std::move(f)) {}

  value_type zero() const { return {}; }
  value_type one() const { return {1}; }
  /// Injective embedding of non-negative integers below 2^d.
  value_type from_index(std::uint64_t i) const { return field->element(i); }
  /// Parity of v, the image of Z in a characteristic-2 ring.
  value_type from_int(std::int64_t v) const { return {static_cast<std::uint64_t>(v) & 1}; }

  static bool is_zero(value_type a) { return a.bits == 0; }
  static void add_to(value_type& acc, value_type a) { acc.bits ^= a.bits; }
  static void sub_from(value_type& acc, value_type a) { acc.bits ^= a.bits; }
  static value_type neg(value_type a) { return a; }
  value_type mul(value_type a, value_type b) const { return field->mul(a, b); }
  void add_product(value_type& acc, value_type a, value_type b) const { acc.bits ^= field->mul(a, b).bits; }
  void sub_product(value_type& acc, value_type a, value_type b) const { acc.bits ^= field->mul(a, b).bits; }
  /// dst[i] += c * src[i]
  void axpy(value_type* dst, const value_type* src, std::size_t count, value_type c) const {
    if (c.bits == 1) {
      for (std::size_t i = 0; i < count; ++i) dst[i].bits ^= src[i].bits;
    } else {
      field->axpy(dst, src, count, c);
    }
  }

  friend bool operator==(const Gf2mRing& a, const Gf2mRing& b) {
    return a.field == b.field || (a.field->degree() == b.field->degree() && a.field->modulus() == b.field->modulus());
  }
};

/// Exact integer coefficients for the deterministic algorithms.
struct IntegerRing {
  using value_type = BigInt;
  static constexpr bool kCharacteristicTwo = false;

  value_type zero() const { return {}; }
  value_type one() const { return {1}; }
  value_type from_index(std::uint64_t i) const { return BigInt(static_cast<std::int64_t>(i)); }
  value_type from_int(std::int64_t v) const { return BigInt(v); }

  static bool is_zero(const value_type& a) { return a.is_zero(); }
  static void add_to(value_type& acc, const value_type& a) { acc += a; }
  static void sub_from(value_type& acc, const value_type& a) { acc -= a; }
  static value_type neg(value_type a) {
    a.negate();
    return a;
  }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  void add_product(value_type& acc, const value_type& a, const value_type& b) const { acc.add_product(a, b); }
  void sub_product(value_type& acc, const value_type& a, const value_type& b) const { acc.sub_product(a, b); }
  void axpy(value_type* dst, const value_type* src, std::size_t count, const value_type& c) const {
    if (c.is_zero()) return;
    const bool unit = c == BigInt(1);
    const bool neg_unit = c == BigInt(-1);
    for (std::size_t i = 0; i < count; ++i) {
      if (src[i].is_zero()) continue;
      if (unit) {
        dst[i] += src[i];
      } else if (neg_unit) {
        dst[i] -= src[i];
      } else {
        dst[i].add_product(src[i], c);
      }
    }
  }

  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

}  // namespace extensor
