#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace extensor {

/// Arbitrary-precision signed integer.
///
/// Values that fit in 64 bits are stored inline; arithmetic promotes to a GMP integer on
/// overflow and demotes again whenever a result fits. Coefficients of deterministic walk
/// extensors are mostly small, so the inline path carries nearly all of the work.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  explicit BigInt(const mpz_class& v) { assign(v); }
  static BigInt from_string(const std::string& s);

  BigInt(const BigInt& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
  BigInt(BigInt&&) noexcept = default;
  BigInt& operator=(const BigInt& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  BigInt& operator=(BigInt&&) noexcept = default;

  bool is_zero() const { return !big_ && small_ == 0; }
  int sign() const;
  bool fits_int64() const { return !big_; }
  std::int64_t to_int64() const;  // throws DomainError if it does not fit
  double to_double() const;
  mpz_class to_mpz() const;
  std::string to_string() const;

  /// Minimal little-endian two's-complement encoding (zero encodes as no bytes).
  std::vector<std::uint8_t> to_twos_complement() const;
  static BigInt from_twos_complement(const std::uint8_t* data, std::size_t len);

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  /// *this += a * b
  void add_product(const BigInt& a, const BigInt& b);
  /// *this -= a * b
  void sub_product(const BigInt& a, const BigInt& b);
  void negate();

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator-(BigInt a) {
    a.negate();
    return a;
  }
  friend bool operator==(const BigInt& a, const BigInt& b);
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

 private:
  void assign(const mpz_class& v);
  void normalize();
  mpz_class& promote();

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace extensor
