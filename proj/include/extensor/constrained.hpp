#pragma once

#include <cstdint>
#include <vector>

#include "extensor/codes.hpp"
#include "extensor/kpath_oracle.hpp"
#include "extensor/truncated_poly.hpp"

namespace extensor {

/// Occupancy bounds for a constrained k-path: at most mu1 vertices of V1 and at most mu2 of V2.
struct ConstraintSpec {
  std::vector<Vertex> V1;
  std::vector<Vertex> V2;
  unsigned mu1 = 0;
  unsigned mu2 = 0;

  /// mu clamped to the size of its set and to k.
  unsigned clamped_mu1(unsigned k) const;
  unsigned clamped_mu2(unsigned k) const;
  std::size_t intersection_size() const;
  /// Half the extensor dimension: k plus the most extra vectors any compliant path carries.
  unsigned dimension(unsigned k) const;
};

/// Walks on k vertices with at least k - 1 distinct vertices, as a deterministic state over
/// two copies of the graph in which every second-copy vertex shares one lifted code.
DeterministicState kwalk_one_repeat_build(const DirectedGraph& g, unsigned k, bool parallel = true);

/// Deterministic k-path oracle honouring the occupancy bounds of `spec`.
///
/// The i-th V1 vertex carries the i-th member of a mu1-dimensional subspace code, likewise for
/// V2; vertices in both carry the product of their two lifted codes. States are graded by walk
/// length and certified on the diagonal masks.
DeterministicState constrained_kpath_build(const DirectedGraph& g, unsigned k, const ConstraintSpec& spec,
                                          bool parallel = true);

/// Subspace code with a pseudorandom basis over GF(2^d), one per colour.
SubspaceCode<Gf2mRing> random_subspace(const Gf2mRing& ring, std::uint64_t seed, std::uint64_t colour, unsigned mu,
                                       unsigned dims);

/// z * x: tags a factor with one power of z so mixed-degree products can be separated by length.
template <class Ring>
TruncatedPoly<Ring> z_graded(const Extensor<Ring>& x, unsigned degree_bound) {
  TruncatedPoly<Ring> p(x.ring(), x.dims(), degree_bound);
  if (degree_bound >= 1) p[1] = x;
  return p;
}

/// Embeds a homogeneous x into `dims` coordinates and, if its degree is odd, wedges it with the
/// padding generator e_{pad}. The result has even degree and commutes with every other extensor.
template <class Ring>
Extensor<Ring> even_pad(const Extensor<Ring>& x, unsigned dims, unsigned pad) {
  if (dims < x.dims() || pad < x.dims() || pad >= dims) throw DomainError("padding generator out of range");
  Extensor<Ring> out(x.ring(), dims);
  int degree = -1;
  for (std::uint32_t I = 0; I < x.size(); ++I) {
    if (Ring::is_zero(x[I])) continue;
    const int d = std::popcount(I);
    if (degree >= 0 && d != degree) throw DomainError("even padding needs a homogeneous extensor");
    degree = d;
  }
  const bool odd = degree % 2 != 0;
  for (std::uint32_t I = 0; I < x.size(); ++I) {
    if (Ring::is_zero(x[I])) continue;
    // e_I ^ e_pad keeps the sign: pad lies above every generator of I.
    out[odd ? (I | (1U << pad)) : I] = x[I];
  }
  return out;
}

/// Wedge of even-padded factors; factor i of odd degree uses padding generator base + i.
template <class Ring>
Extensor<Ring> wedge_even_padded(const std::vector<Extensor<Ring>>& xs, unsigned dims) {
  if (xs.empty()) throw DomainError("no factors");
  const unsigned base = xs.front().dims();
  if (dims < base + xs.size()) throw DomainError("not enough padding generators");
  auto acc = even_pad(xs[0], dims, base);
  for (std::size_t i = 1; i < xs.size(); ++i) acc = wedge(acc, even_pad(xs[i], dims, base + static_cast<unsigned>(i)));
  return acc;
}

}  // namespace extensor
