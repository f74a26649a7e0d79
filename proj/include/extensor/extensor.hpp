#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "extensor/error.hpp"
#include "extensor/ring.hpp"

namespace extensor {

/// Largest supported number of generators; coefficient vectors hold at most 2^26 entries.
inline constexpr unsigned kMaxDims = 26;

inline void check_dims(unsigned dims) {
  if (dims > kMaxDims) {
    throw CapabilityError("extensor dimension " + std::to_string(dims) + " exceeds cap " +
                          std::to_string(kMaxDims));
  }
}

/// Sign exponent for moving generator j into ascending position within mask I:
/// the number of elements of I greater than j.
inline unsigned inversions_above(std::uint32_t mask, unsigned j) {
  return static_cast<unsigned>(std::popcount(mask >> (j + 1)));
}

/// Parity of #{(i, j) in I x J : i > j}.
inline bool merge_sign_odd(std::uint32_t I, std::uint32_t J) {
  unsigned count = 0;
  while (J != 0) {
    unsigned j = static_cast<unsigned>(std::countr_zero(J));
    count += inversions_above(I, j);
    J &= J - 1;
  }
  return (count & 1U) != 0;
}

/// Element of the exterior algebra over Ring^D, stored densely.
///
/// Coefficient `x[I]` multiplies e_I, where generator i (0-based) is bit i of I.
template <class Ring>
class Extensor {
 public:
  using value_type = typename Ring::value_type;

  Extensor() = default;
  Extensor(Ring ring, unsigned dims) : ring_(std::move(ring)), dims_(dims) {
    check_dims(dims);
    coeffs_.assign(std::size_t{1} << dims, ring_.zero());
  }

  static Extensor scalar(const Ring& ring, unsigned dims, value_type c) {
    Extensor x(ring, dims);
    x.coeffs_[0] = std::move(c);
    return x;
  }
  static Extensor one(const Ring& ring, unsigned dims) { return scalar(ring, dims, ring.one()); }
  static Extensor basis(const Ring& ring, unsigned dims, std::uint32_t mask) {
    Extensor x(ring, dims);
    x.at(mask) = ring.one();
    return x;
  }

  const Ring& ring() const { return ring_; }
  unsigned dims() const { return dims_; }
  std::size_t size() const { return coeffs_.size(); }
  std::uint32_t full_mask() const { return static_cast<std::uint32_t>(coeffs_.size() - 1); }

  value_type& operator[](std::uint32_t mask) { return coeffs_[mask]; }
  const value_type& operator[](std::uint32_t mask) const { return coeffs_[mask]; }
  value_type& at(std::uint32_t mask) {
    if (mask >= coeffs_.size()) throw DomainError("mask outside extensor dimension");
    return coeffs_[mask];
  }
  const value_type& at(std::uint32_t mask) const {
    if (mask >= coeffs_.size()) throw DomainError("mask outside extensor dimension");
    return coeffs_[mask];
  }
  /// Coefficient of e_{[D]}.
  const value_type& top() const { return coeffs_.back(); }

  std::vector<value_type>& coeffs() { return coeffs_; }
  const std::vector<value_type>& coeffs() const { return coeffs_; }
  value_type* data() { return coeffs_.data(); }
  const value_type* data() const { return coeffs_.data(); }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!Ring::is_zero(c)) return false;
    }
    return true;
  }

  Extensor& operator+=(const Extensor& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) Ring::add_to(coeffs_[i], o.coeffs_[i]);
    return *this;
  }
  Extensor& operator-=(const Extensor& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) Ring::sub_from(coeffs_[i], o.coeffs_[i]);
    return *this;
  }
  /// *this += c * o
  void add_scaled(const Extensor& o, const value_type& c) {
    check_same(o);
    if (Ring::is_zero(c)) return;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!Ring::is_zero(o.coeffs_[i])) ring_.add_product(coeffs_[i], o.coeffs_[i], c);
    }
  }
  Extensor& scale(const value_type& c) {
    for (auto& v : coeffs_) v = ring_.mul(v, c);
    return *this;
  }

  friend Extensor operator+(Extensor a, const Extensor& b) { return a += b; }
  friend Extensor operator-(Extensor a, const Extensor& b) { return a -= b; }
  friend bool operator==(const Extensor& a, const Extensor& b) {
    return a.dims_ == b.dims_ && a.coeffs_ == b.coeffs_;
  }

  void check_same(const Extensor& o) const {
    if (o.dims_ != dims_) throw DomainError("extensor dimension mismatch");
  }

 private:
  Ring ring_{};
  unsigned dims_ = 0;
  std::vector<value_type> coeffs_;
};

/// A degree-1 extensor sum_i v[i] e_i.
template <class Ring>
struct CodeVector {
  using value_type = typename Ring::value_type;
  std::vector<value_type> entries;

  unsigned dims() const { return static_cast<unsigned>(entries.size()); }
  friend bool operator==(const CodeVector&, const CodeVector&) = default;
};

template <class Ring>
Extensor<Ring> to_extensor(const Ring& ring, const CodeVector<Ring>& v) {
  Extensor<Ring> x(ring, v.dims());
  for (unsigned i = 0; i < v.dims(); ++i) x[std::uint32_t{1} << i] = v.entries[i];
  return x;
}

/// out += x ^ v over raw coefficient arrays of length 2^dims; `out` must not alias `x`.
template <class Ring>
void skew_mul_accumulate(const Ring& ring, unsigned dims, const typename Ring::value_type* x,
                         const CodeVector<Ring>& v, typename Ring::value_type* out) {
  const std::uint32_t size = std::uint32_t{1} << dims;
  for (std::uint32_t I = 0; I < size; ++I) {
    if (Ring::is_zero(x[I])) continue;
    std::uint32_t free = (size - 1) & ~I;
    while (free != 0) {
      unsigned j = static_cast<unsigned>(std::countr_zero(free));
      free &= free - 1;
      const auto& vj = v.entries[j];
      if (Ring::is_zero(vj)) continue;
      if constexpr (Ring::kCharacteristicTwo) {
        ring.add_product(out[I | (1U << j)], x[I], vj);
      } else if (inversions_above(I, j) & 1U) {
        ring.sub_product(out[I | (1U << j)], x[I], vj);
      } else {
        ring.add_product(out[I | (1U << j)], x[I], vj);
      }
    }
  }
}

/// x ^ v. O(2^D * D) ring operations.
template <class Ring>
Extensor<Ring> skew_mul(const Extensor<Ring>& x, const CodeVector<Ring>& v) {
  if (v.dims() != x.dims()) throw DomainError("skew_mul: dimension mismatch");
  Extensor<Ring> out(x.ring(), x.dims());
  skew_mul_accumulate(x.ring(), x.dims(), x.data(), v, out.data());
  return out;
}

/// General product over a characteristic-2 ring via ranked zeta/Moebius transforms.
///
/// [e_I](x ^ y) = sum_{T subset I} [e_T]x [e_{I\T}]y, in O(2^D * D^2) ring operations.
template <class Ring>
Extensor<Ring> wedge_char2(const Extensor<Ring>& x, const Extensor<Ring>& y) {
  if constexpr (!Ring::kCharacteristicTwo) {
    throw DomainError("wedge_char2 requires a characteristic-2 ring");
  } else {
    x.check_same(y);
    const Ring& ring = x.ring();
    const unsigned D = x.dims();
    const std::size_t size = x.size();
    using V = typename Ring::value_type;
    // ranked[r * size + S]
    std::vector<V> fx((D + 1) * size, ring.zero());
    std::vector<V> fy((D + 1) * size, ring.zero());
    for (std::uint32_t S = 0; S < size; ++S) {
      unsigned r = static_cast<unsigned>(std::popcount(S));
      fx[r * size + S] = x[S];
      fy[r * size + S] = y[S];
    }
    auto zeta = [&](std::vector<V>& f, unsigned r) {
      V* row = f.data() + r * size;
      for (unsigned b = 0; b < D; ++b) {
        const std::uint32_t bit = 1U << b;
        for (std::uint32_t S = 0; S < size; ++S) {
          if (S & bit) Ring::add_to(row[S], row[S ^ bit]);
        }
      }
    };
    for (unsigned r = 0; r <= D; ++r) {
      zeta(fx, r);
      zeta(fy, r);
    }
    std::vector<V> h((D + 1) * size, ring.zero());
    for (unsigned r = 0; r <= D; ++r) {
      for (unsigned i = 0; i <= r; ++i) {
        const V* a = fx.data() + i * size;
        const V* b = fy.data() + (r - i) * size;
        V* c = h.data() + r * size;
        for (std::uint32_t S = 0; S < size; ++S) {
          if (!Ring::is_zero(a[S]) && !Ring::is_zero(b[S])) ring.add_product(c[S], a[S], b[S]);
        }
      }
    }
    // Moebius inversion coincides with zeta in characteristic 2.
    Extensor<Ring> out(ring, D);
    for (unsigned r = 0; r <= D; ++r) zeta(h, r);
    for (std::uint32_t S = 0; S < size; ++S) {
      out[S] = h[static_cast<unsigned>(std::popcount(S)) * size + S];
    }
    return out;
  }
}

/// Signed general product by direct expansion over disjoint mask pairs.
///
/// Only nonzero coefficients of `x` are visited. For each, the partner masks come from
/// whichever is smaller: the submasks of the complement or the nonzero support of `y`.
template <class Ring>
Extensor<Ring> wedge_naive(const Extensor<Ring>& x, const Extensor<Ring>& y) {
  x.check_same(y);
  const Ring& ring = x.ring();
  const std::uint32_t full = x.full_mask();
  std::vector<std::uint32_t> ysupport;
  for (std::uint32_t J = 0; J <= full; ++J) {
    if (!Ring::is_zero(y[J])) ysupport.push_back(J);
  }
  Extensor<Ring> out(ring, x.dims());
  auto accumulate = [&](std::uint32_t I, std::uint32_t J) {
    if constexpr (Ring::kCharacteristicTwo) {
      ring.add_product(out[I | J], x[I], y[J]);
    } else if (merge_sign_odd(I, J)) {
      ring.sub_product(out[I | J], x[I], y[J]);
    } else {
      ring.add_product(out[I | J], x[I], y[J]);
    }
  };
  for (std::uint32_t I = 0; I <= full; ++I) {
    if (Ring::is_zero(x[I])) continue;
    const std::uint32_t comp = full & ~I;
    const std::size_t submasks = std::size_t{1} << std::popcount(comp);
    if (submasks <= ysupport.size()) {
      for (std::uint32_t J = comp;; J = (J - 1) & comp) {
        if (!Ring::is_zero(y[J])) accumulate(I, J);
        if (J == 0) break;
      }
    } else {
      for (std::uint32_t J : ysupport) {
        if ((J & I) == 0) accumulate(I, J);
      }
    }
  }
  return out;
}

/// The general product, routed to the fast transform in characteristic 2.
template <class Ring>
Extensor<Ring> wedge(const Extensor<Ring>& x, const Extensor<Ring>& y) {
  if constexpr (Ring::kCharacteristicTwo) {
    return wedge_char2(x, y);
  } else {
    return wedge_naive(x, y);
  }
}

/// The single coefficient [e_K](x ^ y), in O(2^|K|) products.
template <class Ring>
typename Ring::value_type wedge_coefficient(const Extensor<Ring>& x, const Extensor<Ring>& y,
                                            std::uint32_t K) {
  x.check_same(y);
  const Ring& ring = x.ring();
  auto acc = ring.zero();
  for (std::uint32_t I = K;; I = (I - 1) & K) {
    const std::uint32_t J = K & ~I;
    if (!Ring::is_zero(x[I]) && !Ring::is_zero(y[J])) {
      if (!Ring::kCharacteristicTwo && merge_sign_odd(I, J)) {
        ring.sub_product(acc, x[I], y[J]);
      } else {
        ring.add_product(acc, x[I], y[J]);
      }
    }
    if (I == 0) break;
  }
  return acc;
}

/// v_1 ^ ... ^ v_m. For m = D this is det(v_1 | ... | v_D) e_{[D]}.
template <class Ring>
Extensor<Ring> wedge_vectors(const Ring& ring, unsigned dims, const std::vector<CodeVector<Ring>>& vs) {
  auto x = Extensor<Ring>::one(ring, dims);
  for (const auto& v : vs) {
    if (v.dims() != dims) throw DomainError("wedge_vectors: dimension mismatch");
    x = skew_mul(x, v);
  }
  return x;
}

/// (1, p, p^2, ..., p^{D-1}) with p the ring's embedding of `index`.
///
/// Over the integers p = index, so vandermonde(2, 3) = (1, 2, 4). Over GF(2^d) the index
/// is used as a bit pattern, which is injective for index < 2^d.
template <class Ring>
CodeVector<Ring> vandermonde(const Ring& ring, std::uint64_t index, unsigned dims) {
  CodeVector<Ring> v;
  v.entries.reserve(dims);
  auto p = ring.from_index(index);
  auto cur = ring.one();
  for (unsigned t = 0; t < dims; ++t) {
    v.entries.push_back(cur);
    cur = ring.mul(cur, p);
  }
  return v;
}

/// (v, 0) in dimension 2k.
template <class Ring>
CodeVector<Ring> pad_back(const Ring& ring, const CodeVector<Ring>& v) {
  CodeVector<Ring> out = v;
  out.entries.resize(2 * v.dims(), ring.zero());
  return out;
}

/// (0, v) in dimension 2k.
template <class Ring>
CodeVector<Ring> pad_front(const Ring& ring, const CodeVector<Ring>& v) {
  CodeVector<Ring> out;
  out.entries.assign(v.dims(), ring.zero());
  out.entries.insert(out.entries.end(), v.entries.begin(), v.entries.end());
  return out;
}

/// The degree-2 code (v, 0) ^ (0, v) in dimension 2k.
template <class Ring>
Extensor<Ring> lift(const Ring& ring, const CodeVector<Ring>& v) {
  const unsigned dims = 2 * v.dims();
  auto x = Extensor<Ring>::one(ring, dims);
  return skew_mul(skew_mul(x, pad_back(ring, v)), pad_front(ring, v));
}

}  // namespace extensor
