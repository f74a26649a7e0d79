#include "extensor/dynamic_cover.hpp"

#include <algorithm>
#include <string>

#include "extensor/approx_count.hpp"
#include "extensor/error.hpp"
#include "extensor/kpath_oracle.hpp"
#include "extensor/prf.hpp"

namespace extensor {

template <>
Gf2mRing make_ring<Gf2mRing>(unsigned field_degree, unsigned k, std::uint64_t codes) {
  return Gf2mRing(make_field(field_degree, k, codes + 1));
}

template <>
IntegerRing make_ring<IntegerRing>(unsigned, unsigned, std::uint64_t) {
  return IntegerRing{};
}

std::vector<Element> normalize_set(std::vector<Element> elements, std::uint32_t universe) {
  if (elements.empty()) throw DomainError("sets must be nonempty");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.front() == 0 || elements.back() > universe) {
    throw DomainError("element outside universe [1, " + std::to_string(universe) + "]");
  }
  return elements;
}

template <class Ring>
FactoredCode<Ring> ElementCodes<Ring>::code(Element a) const {
  if (!explicit_.empty()) {
    if (a == 0 || a > explicit_.size()) throw DomainError("no code for element " + std::to_string(a));
    return explicit_[a - 1];
  }
  auto v = vandermonde(ring_, a, k_);
  if constexpr (Ring::kCharacteristicTwo) {
    return FactoredCode<Ring>::vector(ring_, std::move(v));
  } else {
    return FactoredCode<Ring>::lifted(ring_, v);
  }
}

template <class Ring>
FactoredCode<Ring> ElementCodes<Ring>::set_code(const std::vector<Element>& sorted) const {
  auto c = FactoredCode<Ring>::constant(ring_, ring_.one());
  for (Element a : sorted) c.append(ring_, code(a));
  return c;
}

// ---------------------------------------------------------------------------
// ExactCover

template <class Ring>
ExactCover<Ring>::ExactCover(std::uint32_t universe, unsigned k, std::uint64_t seed, unsigned field_degree)
    : ExactCover(universe, ElementCodes<Ring>(make_ring<Ring>(field_degree, k, universe), k), seed) {}

template <class Ring>
ExactCover<Ring>::ExactCover(std::uint32_t universe, ElementCodes<Ring> codes, std::uint64_t seed)
    : universe_(universe), codes_(std::move(codes)), seed_(seed) {
  if (codes_.k() == 0) throw DomainError("k must be at least 1");
  check_dims(codes_.dims());
  P_ = Extensor<Ring>::one(codes_.ring(), codes_.dims());
}

template <class Ring>
void ExactCover<Ring>::extend_universe(std::uint32_t universe) {
  if (universe <= universe_) return;
  if constexpr (Ring::kCharacteristicTwo) {
    if (universe >= (std::uint64_t{1} << codes_.ring().field->degree())) {
      throw CapabilityError("universe exceeds the field size");
    }
  }
  universe_ = universe;
}

template <class Ring>
const std::vector<Element>& ExactCover<Ring>::elements(Handle h) const {
  auto it = sets_.find(h);
  if (it == sets_.end()) throw DomainError("unknown handle " + std::to_string(h));
  return it->second.elements;
}

template <class Ring>
void ExactCover<Ring>::multiply(const Entry& e, bool inverse) {
  if (e.elements.size() > codes_.k()) return;
  auto code = codes_.set_code(e.elements);
  code.scalar = codes_.ring().mul(code.scalar, e.y);
  auto term = code.apply(P_);
  if (inverse) {
    P_ -= term;
  } else {
    P_ += term;
  }
}

template <class Ring>
Handle ExactCover<Ring>::insert(std::vector<Element> elements) {
  Entry e;
  e.elements = normalize_set(std::move(elements), universe_);
  const Handle h = next_++;
  if constexpr (Ring::kCharacteristicTwo) {
    e.y = prf_sample(*codes_.ring().field, seed_, {prf_tag::kSetVar, h});
  } else {
    e.y = codes_.ring().one();
  }
  multiply(e, false);
  sets_.emplace(h, std::move(e));
  return h;
}

template <class Ring>
void ExactCover<Ring>::remove(Handle h) {
  auto it = sets_.find(h);
  if (it == sets_.end()) throw DomainError("unknown handle " + std::to_string(h));
  // Over GF(2^d) the factor is its own inverse; over the integers (1 + X)(1 - X) = 1.
  multiply(it->second, true);
  sets_.erase(it);
}

// ---------------------------------------------------------------------------
// PartialCover

template <class Ring>
PartialCover<Ring>::PartialCover(std::uint32_t universe, unsigned k, std::uint64_t seed, unsigned field_degree)
    : universe_(universe), k_(k), seed_(seed), codes_(make_ring<Ring>(field_degree, k, universe), k) {
  if (k == 0) throw DomainError("k must be at least 1");
  check_dims(codes_.dims());
  if constexpr (Ring::kCharacteristicTwo) {
    slots_.assign(k, Extensor<Ring>(codes_.ring(), codes_.dims()));
  } else {
    pz_ = TruncatedPoly<Ring>::one(codes_.ring(), codes_.dims(), k + 1);
  }
}

template <class Ring>
void PartialCover<Ring>::extend_universe(std::uint32_t universe) {
  if (universe <= universe_) return;
  if constexpr (Ring::kCharacteristicTwo) {
    if (universe >= (std::uint64_t{1} << codes_.ring().field->degree())) {
      throw CapabilityError("universe exceeds the field size");
    }
  }
  universe_ = universe;
}

template <class Ring>
const std::vector<Element>& PartialCover<Ring>::elements(Handle h) const {
  auto it = sets_.find(h);
  if (it == sets_.end()) throw DomainError("unknown handle " + std::to_string(h));
  return it->second.elements;
}

template <class Ring>
Extensor<Ring> PartialCover<Ring>::slot_term(std::uint64_t key, const std::vector<Element>& s, unsigned j) const {
  const auto& ring = codes_.ring();
  auto e = Extensor<Ring>::one(ring, codes_.dims());
  if constexpr (Ring::kCharacteristicTwo) {
    for (Element a : s) {
      auto c = codes_.code(a);
      c.scalar = prf_sample(*ring.field, seed_, {prf_tag::kSlotVar, 0, a, j});
      e += c.apply(e);
    }
    e.scale(prf_sample(*ring.field, seed_, {prf_tag::kSlotVar, 1, key, j}));
  }
  return e;
}

template <class Ring>
TruncatedPoly<Ring> PartialCover<Ring>::times_factor(const TruncatedPoly<Ring>& p,
                                                     const std::vector<Element>& s) const {
  auto out = p;
  for (Element a : s) {
    const auto c = codes_.code(a);
    for (unsigned i = 0; i <= out.degree_bound(); ++i) {
      if (!out[i].is_zero()) out[i] += c.apply(out[i]);
    }
  }
  return out;
}

template <class Ring>
TruncatedPoly<Ring> PartialCover<Ring>::times_x(const TruncatedPoly<Ring>& p, const std::vector<Element>& s) const {
  auto out = times_factor(p, s);
  out -= p;
  return out;
}

template <class Ring>
Handle PartialCover<Ring>::insert(std::vector<Element> elements, std::optional<std::uint64_t> key) {
  Entry e;
  e.elements = normalize_set(std::move(elements), universe_);
  e.large = e.elements.size() >= k_;
  const Handle h = next_++;
  e.key = key.value_or(h);
  if (e.large) {
    ++large_;
  } else if constexpr (Ring::kCharacteristicTwo) {
    for (unsigned j = 0; j < k_; ++j) slots_[j] += slot_term(e.key, e.elements, j);
  } else {
    pz_ += times_x(pz_, e.elements).shifted();
  }
  sets_.emplace(h, std::move(e));
  return h;
}

template <class Ring>
void PartialCover<Ring>::remove(Handle h) {
  auto it = sets_.find(h);
  if (it == sets_.end()) throw DomainError("unknown handle " + std::to_string(h));
  const Entry& e = it->second;
  if (e.large) {
    --large_;
  } else if constexpr (Ring::kCharacteristicTwo) {
    for (unsigned j = 0; j < k_; ++j) slots_[j] += slot_term(e.key, e.elements, j);
  } else {
    // (1 + zX)^{-1} = sum_i (-zX)^i, cut off by the truncation.
    auto result = pz_;
    auto term = pz_;
    for (unsigned i = 1; i <= pz_.degree_bound(); ++i) {
      auto next = times_x(term, e.elements).shifted();
      next.scale(codes_.ring().from_int(-1));
      term = std::move(next);
      if (term.is_zero()) break;
      result += term;
    }
    pz_ = std::move(result);
  }
  sets_.erase(it);
}

template <class Ring>
std::optional<unsigned> PartialCover<Ring>::query() const {
  if (large_ > 0) return 1U;
  if constexpr (Ring::kCharacteristicTwo) {
    auto prefix = slots_[0];
    if (!Ring::is_zero(prefix.top())) return 1U;
    for (unsigned t = 2; t <= k_; ++t) {
      prefix = wedge_char2(prefix, slots_[t - 1]);
      if (!Ring::is_zero(prefix.top())) return t;
    }
  } else {
    for (unsigned t = 1; t <= k_; ++t) {
      if (!Ring::is_zero(pz_[t].top())) return t;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// SetPacking and PackingCounter

template <class Ring>
SetPacking<Ring>::SetPacking(std::uint32_t universe, unsigned m, unsigned k, std::uint64_t seed,
                             unsigned field_degree)
    : m_(m), cover_(universe, m * k, seed, field_degree) {
  if (m == 0) throw DomainError("m must be at least 1");
}

template <class Ring>
Handle SetPacking<Ring>::insert(std::vector<Element> elements) {
  auto s = normalize_set(std::move(elements), cover_.universe());
  if (s.size() != m_) throw DomainError("packing sets must have exactly m elements");
  return cover_.insert(std::move(s));
}

PackingCounter::PackingCounter(std::uint32_t universe, unsigned m, unsigned k, double epsilon, std::uint64_t seed)
    : m_(m), k_(k) {
  if (m == 0 || k == 0) throw DomainError("m and k must be at least 1");
  const unsigned mk = m * k;
  check_dims(2 * mk);
  const unsigned r = counting_trials(epsilon);
  IntegerRing ring;
  trials_.reserve(r);
  for (unsigned t = 0; t < r; ++t) {
    std::vector<FactoredCode<IntegerRing>> codes;
    codes.reserve(universe);
    for (Element a = 1; a <= universe; ++a) {
      codes.push_back(FactoredCode<IntegerRing>::lifted(ring, random_sign_vector(seed, t, a, mk)));
    }
    trials_.emplace_back(universe, ElementCodes<IntegerRing>(ring, mk, std::move(codes)), seed);
  }
}

Handle PackingCounter::insert(std::vector<Element> elements) {
  auto s = normalize_set(std::move(elements), trials_.front().universe());
  if (s.size() != m_) throw DomainError("packing sets must have exactly m elements");
  Handle h = 0;
  for (auto& t : trials_) h = t.insert(s);
  return h;
}

void PackingCounter::remove(Handle h) {
  for (auto& t : trials_) t.remove(h);
}

double PackingCounter::estimate() const {
  const unsigned mk = m_ * k_;
  const double norm = lift_sign(mk) / factorial(mk);
  double sum = 0.0;
  for (const auto& t : trials_) sum += t.product().top().to_double() * norm;
  return sum / static_cast<double>(trials_.size());
}

// ---------------------------------------------------------------------------
// AtLeastUnion

template <class Ring>
AtLeastUnion<Ring>::AtLeastUnion(std::uint32_t universe, unsigned k, std::uint64_t seed, unsigned field_degree) {
  if (k == 0) throw DomainError("k must be at least 1");
  for (unsigned s = k; s <= 2 * k; ++s) covers_.emplace_back(universe, s, seed + s, field_degree);
}

template <class Ring>
Handle AtLeastUnion<Ring>::insert(std::vector<Element> elements) {
  auto s = normalize_set(std::move(elements), covers_.front().universe());
  std::vector<Handle> hs;
  for (auto& c : covers_) hs.push_back(c.insert(s));
  const Handle h = next_++;
  handles_.emplace(h, std::move(hs));
  return h;
}

template <class Ring>
void AtLeastUnion<Ring>::remove(Handle h) {
  auto it = handles_.find(h);
  if (it == handles_.end()) throw DomainError("unknown handle " + std::to_string(h));
  for (std::size_t i = 0; i < covers_.size(); ++i) covers_[i].remove(it->second[i]);
  handles_.erase(it);
}

template <class Ring>
bool AtLeastUnion<Ring>::query() const {
  return std::any_of(covers_.begin(), covers_.end(), [](const auto& c) { return c.query(); });
}

template class ElementCodes<Gf2mRing>;
template class ElementCodes<IntegerRing>;
template class ExactCover<Gf2mRing>;
template class ExactCover<IntegerRing>;
template class PartialCover<Gf2mRing>;
template class PartialCover<IntegerRing>;
template class SetPacking<Gf2mRing>;
template class SetPacking<IntegerRing>;
template class AtLeastUnion<Gf2mRing>;
template class AtLeastUnion<IntegerRing>;

}  // namespace extensor
