#include "extensor/gf2m.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "extensor/error.hpp"

namespace extensor {
namespace {

constexpr unsigned kTableMaxDegree = 20;

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

// a * b mod f over GF(2), deg f = d, deg a, deg b < d.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f, unsigned d) {
  const std::uint64_t top = std::uint64_t{1} << d;
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= f;
  }
  return r;
}

std::uint64_t polymod(std::uint64_t a, std::uint64_t f) {
  const int df = poly_degree(f);
  for (int da = poly_degree(a); da >= df; da = poly_degree(a)) a ^= f << (da - df);
  return a;
}

std::uint64_t polygcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = polymod(a, b);
    std::swap(a, b);
  }
  return a;
}

// x^(2^e) mod f by repeated squaring.
std::uint64_t x_pow_2e(unsigned e, std::uint64_t f, unsigned d) {
  std::uint64_t r = 2;  // x
  for (unsigned i = 0; i < e; ++i) r = mulmod(r, r, f, d);
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool Gf2mField::is_irreducible(std::uint64_t poly) {
  const int deg = poly_degree(poly);
  if (deg < 1) return false;
  const auto d = static_cast<unsigned>(deg);
  if (d == 1) return true;
  // x^(2^d) == x (mod f)
  if (x_pow_2e(d, poly, d) != 2) return false;
  for (std::uint64_t p : prime_factors(d)) {
    const std::uint64_t h = x_pow_2e(d / static_cast<unsigned>(p), poly, d) ^ 2;
    if (polygcd(poly, h) != 1) return false;
  }
  return true;
}

std::uint64_t Gf2mField::find_irreducible(unsigned degree) {
  if (degree < kMinDegree || degree > kMaxDegree) {
    throw DomainError("field degree must lie in [2, 63], got " + std::to_string(degree));
  }
  const std::uint64_t top = std::uint64_t{1} << degree;
  for (std::uint64_t low = 1; low < top; low += 2) {
    if (is_irreducible(top | low)) return top | low;
  }
  throw DomainError("no irreducible polynomial found");  // unreachable
}

unsigned Gf2mField::required_degree(unsigned k, std::uint64_t codes) {
  const std::uint64_t need = std::max<std::uint64_t>(100ULL * k, codes);
  unsigned d = kMinDegree;
  while (d < kMaxDegree && (std::uint64_t{1} << d) < need) ++d;
  return d;
}

Gf2mField::Gf2mField(unsigned degree) : Gf2mField(degree, find_irreducible(degree)) {}

Gf2mField::Gf2mField(unsigned degree, std::uint64_t modulus) : degree_(degree), modulus_(modulus) {
  if (degree < kMinDegree || degree > kMaxDegree) {
    throw DomainError("field degree must lie in [2, 63], got " + std::to_string(degree));
  }
  if (poly_degree(modulus) != static_cast<int>(degree)) {
    throw DomainError("modulus degree does not match field degree");
  }
  if (!is_irreducible(modulus)) throw DomainError("modulus is reducible");
  if (degree <= kTableMaxDegree) build_tables();
}

void Gf2mField::build_tables() {
  const std::uint64_t order = size() - 1;
  const auto factors = prime_factors(order);
  std::uint64_t g = 2;
  for (;; ++g) {
    bool primitive = true;
    for (std::uint64_t p : factors) {
      if (pow({g}, order / p).bits == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }
  log_.assign(size(), 0);
  exp_.assign(2 * order, 0);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = static_cast<std::uint32_t>(x);
    exp_[i + order] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, g);
  }
  tables_ = true;
}

Gf2mElement Gf2mField::element(std::uint64_t bits) const {
  if (bits >= size()) throw DomainError("value does not fit in GF(2^" + std::to_string(degree_) + ")");
  return {bits};
}

std::uint64_t Gf2mField::mul_slow(std::uint64_t a, std::uint64_t b) const {
  return mulmod(a, b, modulus_, degree_);
}

Gf2mElement Gf2mField::mul(Gf2mElement a, Gf2mElement b) const {
  if (a.bits == 0 || b.bits == 0) return {};
  if (tables_) return {exp_[log_[a.bits] + log_[b.bits]]};
  return {mul_slow(a.bits, b.bits)};
}

Gf2mElement Gf2mField::pow(Gf2mElement a, std::uint64_t e) const {
  std::uint64_t result = 1;
  std::uint64_t base = a.bits;
  while (e != 0) {
    if (e & 1) result = mul_slow(result, base);
    base = mul_slow(base, base);
    e >>= 1;
  }
  return {result};
}

Gf2mElement Gf2mField::inv(Gf2mElement a) const {
  if (a.bits == 0) throw DomainError("inverse of zero");
  const std::uint64_t order = size() - 1;
  if (tables_) return {exp_[(order - log_[a.bits]) % order]};
  return pow(a, order - 1);
}

void Gf2mField::axpy(Gf2mElement* dst, const Gf2mElement* src, std::size_t count, Gf2mElement c) const {
  if (c.bits == 0) return;
  if (tables_) {
    const std::uint32_t lc = log_[c.bits];
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t s = src[i].bits;
      if (s != 0) dst[i].bits ^= exp_[log_[s] + lc];
    }
    return;
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (src[i].bits != 0) dst[i].bits ^= mul_slow(src[i].bits, c.bits);
  }
}

}  // namespace extensor
