#pragma once

#include <cstdint>
#include <vector>

#include "extensor/extensor.hpp"

namespace extensor {

/// A code given as scalar * (v_1 ^ v_2 ^ ... ^ v_r).
///
/// Multiplying by it costs r skew products, which is how walk propagation applies vertex
/// codes without ever forming a general product. r = 0 gives a scalar code.
template <class Ring>
struct FactoredCode {
  using value_type = typename Ring::value_type;
  value_type scalar{};
  std::vector<CodeVector<Ring>> factors;

  unsigned degree() const { return static_cast<unsigned>(factors.size()); }

  static FactoredCode constant(const Ring&, value_type c) { return {std::move(c), {}}; }
  static FactoredCode vector(const Ring& ring, CodeVector<Ring> v) { return {ring.one(), {std::move(v)}}; }
  /// The lifted code (v, 0) ^ (0, v).
  static FactoredCode lifted(const Ring& ring, const CodeVector<Ring>& v) {
    return {ring.one(), {pad_back(ring, v), pad_front(ring, v)}};
  }

  /// Appends the factors of `o` (on the right) and multiplies the scalars.
  FactoredCode& append(const Ring& ring, const FactoredCode& o) {
    scalar = ring.mul(scalar, o.scalar);
    factors.insert(factors.end(), o.factors.begin(), o.factors.end());
    return *this;
  }

  Extensor<Ring> to_extensor(const Ring& ring, unsigned dims) const {
    return apply(Extensor<Ring>::scalar(ring, dims, scalar));
  }

  /// x ^ code, computed by successive skew products.
  Extensor<Ring> apply(Extensor<Ring> x) const {
    for (const auto& v : factors) x = skew_mul(x, v);
    if (!(scalar == x.ring().one())) x.scale(scalar);
    return x;
  }

  /// Raw-buffer form of `apply`: out = x ^ code. `scratch` has the same length and may be clobbered.
  void apply_raw(const Ring& ring, unsigned dims, const value_type* x, value_type* out, value_type* scratch) const {
    const std::size_t size = std::size_t{1} << dims;
    const std::size_t r = factors.size();
    const value_type* src = x;
    for (std::size_t t = 0; t < r; ++t) {
      value_type* dst = (r - t) % 2 == 1 ? out : scratch;
      for (std::size_t i = 0; i < size; ++i) dst[i] = ring.zero();
      skew_mul_accumulate(ring, dims, src, factors[t], dst);
      src = dst;
    }
    if (r == 0) {
      for (std::size_t i = 0; i < size; ++i) out[i] = x[i];
    }
    if (!(scalar == ring.one())) {
      for (std::size_t i = 0; i < size; ++i) {
        if (!Ring::is_zero(out[i])) out[i] = ring.mul(out[i], scalar);
      }
    }
  }

  friend bool operator==(const FactoredCode&, const FactoredCode&) = default;
};

/// Codes confined to the span of mu basis vectors.
///
/// Member i (1-based) is sum_{t=1}^{mu} i^t u_t. Any mu distinct members are linearly
/// independent and any mu + 1 members wedge to zero.
template <class Ring>
class SubspaceCode {
 public:
  SubspaceCode(Ring ring, std::vector<CodeVector<Ring>> basis) : ring_(std::move(ring)), basis_(std::move(basis)) {
    for (const auto& u : basis_) {
      if (u.dims() != dims()) throw DomainError("subspace basis dimension mismatch");
    }
  }

  unsigned mu() const { return static_cast<unsigned>(basis_.size()); }
  unsigned dims() const { return basis_.empty() ? 0 : basis_.front().dims(); }
  const std::vector<CodeVector<Ring>>& basis() const { return basis_; }

  CodeVector<Ring> member(std::uint64_t i) const {
    if (i == 0) throw DomainError("subspace members are 1-based");
    CodeVector<Ring> out;
    out.entries.assign(dims(), ring_.zero());
    auto p = ring_.from_index(i);
    auto coef = p;
    for (const auto& u : basis_) {
      for (unsigned r = 0; r < dims(); ++r) ring_.add_product(out.entries[r], u.entries[r], coef);
      coef = ring_.mul(coef, p);
    }
    return out;
  }

 private:
  Ring ring_;
  std::vector<CodeVector<Ring>> basis_;
};

}  // namespace extensor
