#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "extensor/codes.hpp"
#include "extensor/dynamic_cover.hpp"
#include "extensor/truncated_poly.hpp"

namespace extensor {

/// d-dimensional k-matching: k live tuples pairwise disjoint in every coordinate.
///
/// Coordinate values are 1..universe in each of the d (disjoint) universes. Coordinates 2..d
/// carry codes; Q_a sums the coded tuples with first coordinate a and P(z) = prod_a (1 + z Q_a).
template <class Ring>
class DimMatching {
 public:
  using Tuple = std::vector<std::uint32_t>;

  DimMatching(unsigned d, unsigned k, std::uint32_t universe, std::uint64_t seed = 0, unsigned field_degree = 16);

  Handle insert(Tuple t);
  void remove(Handle h);
  bool query() const { return !Ring::is_zero(pz_[k_].top()); }

  unsigned d() const { return d_; }
  unsigned k() const { return k_; }
  unsigned dims() const { return dims_; }
  const TruncatedPoly<Ring>& pz() const { return pz_; }
  /// Q_a for first coordinate a; zero if no live tuple starts with a.
  Extensor<Ring> accumulator(std::uint32_t a) const;
  const Tuple& tuple(Handle h) const;

  /// M_t: the wedge of the codes of t[2..d].
  Extensor<Ring> tuple_code(const Tuple& t) const;

 private:
  struct Entry {
    Tuple t;
    typename Ring::value_type y{};
  };
  void check_tuple(const Tuple& t) const;
  void update(std::uint32_t a, const Extensor<Ring>& delta);
  /// pz * (1 + z q)
  TruncatedPoly<Ring> times_factor(const TruncatedPoly<Ring>& p, const Extensor<Ring>& q) const;
  /// pz * (1 + z q)^{-1}
  TruncatedPoly<Ring> times_inverse(const TruncatedPoly<Ring>& p, const Extensor<Ring>& q) const;

  unsigned d_;
  unsigned k_;
  std::uint32_t universe_;
  std::uint64_t seed_;
  unsigned dims_;
  Ring ring_;
  std::map<std::uint32_t, Extensor<Ring>> q_;
  TruncatedPoly<Ring> pz_;
  std::map<Handle, Entry> tuples_;
  Handle next_ = 1;
};

}  // namespace extensor
