#include "extensor/matching.hpp"

#include <string>

#include "extensor/error.hpp"
#include "extensor/prf.hpp"

namespace extensor {

template <class Ring>
DimMatching<Ring>::DimMatching(unsigned d, unsigned k, std::uint32_t universe, std::uint64_t seed,
                               unsigned field_degree)
    : d_(d), k_(k), universe_(universe), seed_(seed) {
  if (d < 2) throw DomainError("d must be at least 2");
  if (k == 0) throw DomainError("k must be at least 1");
  dims_ = (Ring::kCharacteristicTwo ? 1 : 2) * (d - 1) * k;
  check_dims(dims_);
  ring_ = make_ring<Ring>(field_degree, k, static_cast<std::uint64_t>(d - 1) * universe);
  pz_ = TruncatedPoly<Ring>::one(ring_, dims_, k);
}

template <class Ring>
void DimMatching<Ring>::check_tuple(const Tuple& t) const {
  if (t.size() != d_) throw DomainError("tuple must have " + std::to_string(d_) + " coordinates");
  for (auto x : t) {
    if (x == 0 || x > universe_) {
      throw DomainError("coordinate value outside [1, " + std::to_string(universe_) + "]");
    }
  }
}

template <class Ring>
Extensor<Ring> DimMatching<Ring>::tuple_code(const Tuple& t) const {
  auto m = Extensor<Ring>::one(ring_, dims_);
  const unsigned base = dims_ / (Ring::kCharacteristicTwo ? 1 : 2);
  for (unsigned c = 1; c < d_; ++c) {
    const std::uint64_t param = static_cast<std::uint64_t>(c - 1) * universe_ + t[c];
    auto v = vandermonde(ring_, param, base);
    if constexpr (Ring::kCharacteristicTwo) {
      m = FactoredCode<Ring>::vector(ring_, std::move(v)).apply(std::move(m));
    } else {
      m = FactoredCode<Ring>::lifted(ring_, v).apply(std::move(m));
    }
  }
  return m;
}

template <class Ring>
Extensor<Ring> DimMatching<Ring>::accumulator(std::uint32_t a) const {
  auto it = q_.find(a);
  return it == q_.end() ? Extensor<Ring>(ring_, dims_) : it->second;
}

template <class Ring>
const typename DimMatching<Ring>::Tuple& DimMatching<Ring>::tuple(Handle h) const {
  auto it = tuples_.find(h);
  if (it == tuples_.end()) throw DomainError("unknown handle " + std::to_string(h));
  return it->second.t;
}

template <class Ring>
TruncatedPoly<Ring> DimMatching<Ring>::times_factor(const TruncatedPoly<Ring>& p, const Extensor<Ring>& q) const {
  // Q has even degree or the ring has characteristic 2, so Q commutes and can sit on the left,
  // where the product walks only its nonzero coefficients.
  auto qp = p.times_left(q, [](const Extensor<Ring>& a, const Extensor<Ring>& b) { return wedge_naive(a, b); });
  auto out = p;
  out += qp.shifted();
  return out;
}

template <class Ring>
TruncatedPoly<Ring> DimMatching<Ring>::times_inverse(const TruncatedPoly<Ring>& p, const Extensor<Ring>& q) const {
  if constexpr (Ring::kCharacteristicTwo) {
    return times_factor(p, q);
  } else {
    auto result = p;
    auto term = p;
    for (unsigned i = 1; i <= k_; ++i) {
      term = term.times_left(q, [](const Extensor<Ring>& a, const Extensor<Ring>& b) { return wedge_naive(a, b); })
                 .shifted();
      term.scale(ring_.from_int(-1));
      if (term.is_zero()) break;
      result += term;
    }
    return result;
  }
}

template <class Ring>
void DimMatching<Ring>::update(std::uint32_t a, const Extensor<Ring>& delta) {
  auto it = q_.find(a);
  if (it != q_.end()) pz_ = times_inverse(pz_, it->second);
  auto q = it == q_.end() ? Extensor<Ring>(ring_, dims_) : it->second;
  q += delta;
  if (q.is_zero()) {
    if (it != q_.end()) q_.erase(it);
    return;
  }
  pz_ = times_factor(pz_, q);
  q_[a] = std::move(q);
}

template <class Ring>
Handle DimMatching<Ring>::insert(Tuple t) {
  check_tuple(t);
  const Handle h = next_++;
  Entry e{std::move(t), ring_.one()};
  if constexpr (Ring::kCharacteristicTwo) e.y = prf_sample(*ring_.field, seed_, {prf_tag::kSetVar, h});
  auto m = tuple_code(e.t);
  m.scale(e.y);
  update(e.t[0], m);
  tuples_.emplace(h, std::move(e));
  return h;
}

template <class Ring>
void DimMatching<Ring>::remove(Handle h) {
  auto it = tuples_.find(h);
  if (it == tuples_.end()) throw DomainError("unknown handle " + std::to_string(h));
  auto m = tuple_code(it->second.t);
  m.scale(Ring::neg(it->second.y));
  update(it->second.t[0], m);
  tuples_.erase(it);
}

template class DimMatching<Gf2mRing>;
template class DimMatching<IntegerRing>;

}  // namespace extensor
