#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "extensor/codes.hpp"
#include "extensor/extensor.hpp"
#include "extensor/truncated_poly.hpp"

namespace extensor {

using Handle = std::uint64_t;
using Element = std::uint32_t;

/// Per-element codes for the set problems.
///
/// Over GF(2^d) element a gets the Vandermonde vector of a in dimension k; over the
/// integers it gets the lift of that vector in dimension 2k. Explicit codes can be supplied
/// instead (random sign vectors for counting).
template <class Ring>
class ElementCodes {
 public:
  ElementCodes() = default;
  ElementCodes(Ring ring, unsigned k) : ring_(std::move(ring)), k_(k) {}
  /// Codes for elements 1..codes.size(); element a uses codes[a - 1].
  ElementCodes(Ring ring, unsigned k, std::vector<FactoredCode<Ring>> codes)
      : ring_(std::move(ring)), k_(k), explicit_(std::move(codes)) {}

  const Ring& ring() const { return ring_; }
  unsigned k() const { return k_; }
  unsigned dims() const { return Ring::kCharacteristicTwo ? k_ : 2 * k_; }
  FactoredCode<Ring> code(Element a) const;
  /// The code of S: the wedge of its element codes in ascending order.
  FactoredCode<Ring> set_code(const std::vector<Element>& sorted) const;

 private:
  Ring ring_{};
  unsigned k_ = 0;
  std::vector<FactoredCode<Ring>> explicit_;
};

/// GF(2^field_degree) checked for `codes` distinct nonzero elements, or the integers.
template <class Ring>
Ring make_ring(unsigned field_degree, unsigned k, std::uint64_t codes);

/// Sorts, de-duplicates and range-checks a set of 1-based elements.
std::vector<Element> normalize_set(std::vector<Element> elements, std::uint32_t universe);

/// Exact k-partial cover: do some pairwise disjoint live sets cover exactly k elements?
///
/// Maintains P = prod over live sets of (1 + y_S chi(S)) over GF(2^d), or of (1 + chi(S))
/// with lifted codes over the integers. Sets larger than k contribute the identity factor.
template <class Ring>
class ExactCover {
 public:
  using value_type = typename Ring::value_type;

  ExactCover(std::uint32_t universe, unsigned k, std::uint64_t seed = 0, unsigned field_degree = 16);
  ExactCover(std::uint32_t universe, ElementCodes<Ring> codes, std::uint64_t seed = 0);

  Handle insert(std::vector<Element> elements);
  void remove(Handle h);
  bool query() const { return !Ring::is_zero(P_.top()); }

  const Extensor<Ring>& product() const { return P_; }
  std::size_t live() const { return sets_.size(); }
  unsigned k() const { return codes_.k(); }
  std::uint32_t universe() const { return universe_; }
  void extend_universe(std::uint32_t universe);
  const std::vector<Element>& elements(Handle h) const;

 private:
  struct Entry {
    std::vector<Element> elements;
    value_type y{};
  };
  void multiply(const Entry& e, bool inverse);

  std::uint32_t universe_;
  ElementCodes<Ring> codes_;
  std::uint64_t seed_;
  Extensor<Ring> P_;
  std::map<Handle, Entry> sets_;
  Handle next_ = 1;
};

/// k-partial cover: the least t such that some t live sets cover at least k elements.
///
/// Over GF(2^d) this keeps k slot sums P_j = sum_S w_{S,j} prod_{a in S} (1 + y_{a,j} chi(a))
/// and tests prefix products. Over the integers it keeps P(z) = prod_S (1 + z X_S) with
/// X_S = prod_{a in S} (1 + lift(a)) - 1 and removes a factor with its truncated inverse series.
/// Sets of size at least k are counted separately and answer t = 1.
template <class Ring>
class PartialCover {
 public:
  using value_type = typename Ring::value_type;

  PartialCover(std::uint32_t universe, unsigned k, std::uint64_t seed = 0, unsigned field_degree = 16);

  /// `key` selects the random slot weights of the set and defaults to the new handle. Live sets
  /// must have distinct keys; reusing a key after removal reproduces the same weights.
  Handle insert(std::vector<Element> elements, std::optional<std::uint64_t> key = std::nullopt);
  void remove(Handle h);
  std::optional<unsigned> query() const;

  std::size_t large_sets() const { return large_; }
  /// Randomized slot sums P_1..P_k.
  const std::vector<Extensor<Ring>>& slots() const { return slots_; }
  /// Deterministic P(z), kept with one spare power to witness that it never exceeds degree k.
  const TruncatedPoly<Ring>& pz() const { return pz_; }
  unsigned k() const { return k_; }
  std::uint32_t universe() const { return universe_; }
  void extend_universe(std::uint32_t universe);
  const std::vector<Element>& elements(Handle h) const;

 private:
  struct Entry {
    std::vector<Element> elements;
    std::uint64_t key = 0;
    bool large = false;
  };
  Extensor<Ring> slot_term(std::uint64_t key, const std::vector<Element>& s, unsigned j) const;
  TruncatedPoly<Ring> times_factor(const TruncatedPoly<Ring>& p, const std::vector<Element>& s) const;
  TruncatedPoly<Ring> times_x(const TruncatedPoly<Ring>& p, const std::vector<Element>& s) const;

  std::uint32_t universe_;
  unsigned k_;
  std::uint64_t seed_;
  ElementCodes<Ring> codes_;
  std::vector<Extensor<Ring>> slots_;
  TruncatedPoly<Ring> pz_;
  std::map<Handle, Entry> sets_;
  std::size_t large_ = 0;
  Handle next_ = 1;
};

/// m-set k-packing: k pairwise disjoint live sets of size m, via exact cover of mk elements.
template <class Ring>
class SetPacking {
 public:
  SetPacking(std::uint32_t universe, unsigned m, unsigned k, std::uint64_t seed = 0, unsigned field_degree = 16);

  Handle insert(std::vector<Element> elements);
  void remove(Handle h) { cover_.remove(h); }
  bool query() const { return cover_.query(); }
  const ExactCover<Ring>& cover() const { return cover_; }
  unsigned m() const { return m_; }

 private:
  unsigned m_;
  ExactCover<Ring> cover_;
};

/// Approximate number of k-packings from ceil(C / epsilon^2) random sign-coded trials.
class PackingCounter {
 public:
  PackingCounter(std::uint32_t universe, unsigned m, unsigned k, double epsilon, std::uint64_t seed = 0);

  Handle insert(std::vector<Element> elements);
  void remove(Handle h);
  double estimate() const;
  unsigned trials() const { return static_cast<unsigned>(trials_.size()); }

 private:
  unsigned m_;
  unsigned k_;
  std::vector<ExactCover<IntegerRing>> trials_;
};

/// Disjoint live sets whose union has between k and 2k elements, via one exact cover per size.
template <class Ring>
class AtLeastUnion {
 public:
  AtLeastUnion(std::uint32_t universe, unsigned k, std::uint64_t seed = 0, unsigned field_degree = 16);

  Handle insert(std::vector<Element> elements);
  void remove(Handle h);
  bool query() const;

 private:
  std::vector<ExactCover<Ring>> covers_;
  std::map<Handle, std::vector<Handle>> handles_;
  Handle next_ = 1;
};

}  // namespace extensor
