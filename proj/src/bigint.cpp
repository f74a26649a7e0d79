#include "extensor/bigint.hpp"

#include <ostream>

#include "extensor/error.hpp"

namespace extensor {
namespace {

mpz_class mpz_from_int64(std::int64_t v) {
  mpz_class r;
  // mpz_set_si takes long, which is 64-bit on the supported platforms.
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace

BigInt BigInt::from_string(const std::string& s) {
  mpz_class v;
  if (v.set_str(s, 10) != 0) throw ParseError("not an integer: " + s);
  return BigInt(v);
}

void BigInt::assign(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    small_ = mpz_get_si(v.get_mpz_t());
    big_.reset();
  } else {
    big_ = std::make_unique<mpz_class>(v);
  }
}

void BigInt::normalize() {
  if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
    small_ = mpz_get_si(big_->get_mpz_t());
    big_.reset();
  }
}

mpz_class& BigInt::promote() {
  if (!big_) big_ = std::make_unique<mpz_class>(mpz_from_int64(small_));
  return *big_;
}

int BigInt::sign() const {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

std::int64_t BigInt::to_int64() const {
  if (big_) throw DomainError("integer does not fit in 64 bits");
  return small_;
}

double BigInt::to_double() const { return big_ ? big_->get_d() : static_cast<double>(small_); }

mpz_class BigInt::to_mpz() const { return big_ ? *big_ : mpz_from_int64(small_); }

std::string BigInt::to_string() const { return big_ ? big_->get_str() : std::to_string(small_); }

BigInt& BigInt::operator+=(const BigInt& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  promote() += o.to_mpz();
  normalize();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  promote() -= o.to_mpz();
  normalize();
  return *this;
}

BigInt& BigInt::operator*=(const BigInt& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  promote() *= o.to_mpz();
  normalize();
  return *this;
}

void BigInt::add_product(const BigInt& a, const BigInt& b) {
  if (!a.big_ && !b.big_ && !big_) {
    std::int64_t p, r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_add_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
  }
  mpz_addmul(promote().get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  normalize();
}

void BigInt::sub_product(const BigInt& a, const BigInt& b) {
  if (!a.big_ && !b.big_ && !big_) {
    std::int64_t p, r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_sub_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
  }
  mpz_submul(promote().get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  normalize();
}

void BigInt::negate() {
  if (!big_ && small_ != INT64_MIN) {
    small_ = -small_;
    return;
  }
  mpz_class& b = promote();
  mpz_neg(b.get_mpz_t(), b.get_mpz_t());
  normalize();
}

bool operator==(const BigInt& a, const BigInt& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // a normalized big value never fits in 64 bits
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  const int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::vector<std::uint8_t> BigInt::to_twos_complement() const {
  if (is_zero()) return {};
  const mpz_class v = to_mpz();
  const bool negative = sgn(v) < 0;
  // For negative v, encode 2^(8n) + v with n large enough that the sign bit is set.
  mpz_class mag = abs(v);
  std::size_t bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
  std::size_t n = bits / 8 + 1;
  mpz_class enc = v;
  if (negative) {
    mpz_class modulus = 1;
    modulus <<= 8 * n;
    enc = modulus + v;
  }
  std::vector<std::uint8_t> out(n, 0);
  std::size_t count = 0;
  mpz_export(out.data(), &count, -1, 1, 0, 0, enc.get_mpz_t());
  // Trim redundant sign-extension bytes.
  while (out.size() > 1) {
    const std::uint8_t last = out.back();
    const std::uint8_t prev = out[out.size() - 2];
    if ((last == 0x00 && !(prev & 0x80)) || (last == 0xFF && (prev & 0x80))) {
      out.pop_back();
    } else {
      break;
    }
  }
  return out;
}

BigInt BigInt::from_twos_complement(const std::uint8_t* data, std::size_t len) {
  if (len == 0) return BigInt{};
  mpz_class v;
  mpz_import(v.get_mpz_t(), len, -1, 1, 0, 0, data);
  if (data[len - 1] & 0x80) {
    mpz_class modulus = 1;
    modulus <<= 8 * len;
    v -= modulus;
  }
  return BigInt(v);
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace extensor
