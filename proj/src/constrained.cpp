#include "extensor/constrained.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "extensor/error.hpp"
#include "extensor/prf.hpp"

namespace extensor {

namespace {

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

unsigned ConstraintSpec::clamped_mu1(unsigned k) const {
  return std::min<unsigned>({mu1, static_cast<unsigned>(sorted_unique(V1).size()), k});
}

unsigned ConstraintSpec::clamped_mu2(unsigned k) const {
  return std::min<unsigned>({mu2, static_cast<unsigned>(sorted_unique(V2).size()), k});
}

std::size_t ConstraintSpec::intersection_size() const {
  const auto a = sorted_unique(V1);
  const auto b = sorted_unique(V2);
  std::vector<Vertex> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.size();
}

unsigned ConstraintSpec::dimension(unsigned k) const {
  const auto extra = std::min<std::size_t>({static_cast<std::size_t>(k), intersection_size(),
                                            static_cast<std::size_t>(clamped_mu1(k)),
                                            static_cast<std::size_t>(clamped_mu2(k))});
  return k + static_cast<unsigned>(extra);
}

DeterministicState kwalk_one_repeat_build(const DirectedGraph& g, unsigned k, bool parallel) {
  if (k == 0) throw DomainError("k must be at least 1");
  check_dims(2 * k);
  DeterministicState st;
  st.mode = Mode::kDeterministic;
  st.embedding = Embedding::kTwoCopy;
  st.target = Target::kTop;
  st.k = k;
  st.dims = 2 * k;
  st.max_len = k;
  st.graph = g;
  const auto n = g.num_vertices();
  st.internal = DirectedGraph(2 * n);
  for (const auto& [u, v] : g.edges()) {
    for (const auto& [a, b] : st.internal_edges(u, v)) st.internal.add_edge(a, b);
  }
  const auto shared = FactoredCode<IntegerRing>::lifted(st.ring, vandermonde(st.ring, n + 1, k));
  for (Vertex v = 0; v < n; ++v) {
    st.codes.push_back(FactoredCode<IntegerRing>::lifted(st.ring, vandermonde(st.ring, v + 1, k)));
  }
  for (Vertex v = 0; v < n; ++v) st.codes.push_back(shared);
  st.start_eligible.assign(2 * n, 1);
  build_walk_sums(st, parallel);
  return st;
}

DeterministicState constrained_kpath_build(const DirectedGraph& g, unsigned k, const ConstraintSpec& spec,
                                           bool parallel) {
  if (k == 0) throw DomainError("k must be at least 1");
  const auto n = g.num_vertices();
  const auto V1 = sorted_unique(spec.V1);
  const auto V2 = sorted_unique(spec.V2);
  for (Vertex v : V1) {
    if (v >= n) throw DomainError("V1 vertex " + std::to_string(v) + " out of range");
  }
  for (Vertex v : V2) {
    if (v >= n) throw DomainError("V2 vertex " + std::to_string(v) + " out of range");
  }
  const unsigned mu1 = spec.clamped_mu1(k);
  const unsigned mu2 = spec.clamped_mu2(k);
  const unsigned d = spec.dimension(k);
  check_dims(2 * d);

  DeterministicState st;
  const IntegerRing& ring = st.ring;
  st.mode = Mode::kDeterministic;
  st.embedding = Embedding::kIdentity;
  st.target = Target::kDiagonal;
  st.k = k;
  st.dims = 2 * d;
  st.max_len = k;
  st.graded = true;
  st.target_grade = k;
  st.graph = g;
  st.internal = g;
  st.start_eligible.assign(n, 1);

  std::vector<CodeVector<IntegerRing>> u;
  std::vector<CodeVector<IntegerRing>> w;
  for (unsigned t = 1; t <= mu1; ++t) u.push_back(vandermonde(ring, t, d));
  for (unsigned t = 1; t <= mu2; ++t) w.push_back(vandermonde(ring, mu1 + t, d));
  const SubspaceCode<IntegerRing> U(ring, u);
  const SubspaceCode<IntegerRing> W(ring, w);
  const CodeVector<IntegerRing> zero{std::vector<BigInt>(d)};
  auto member = [&](const SubspaceCode<IntegerRing>& s, const std::vector<Vertex>& set, Vertex v) {
    if (s.mu() == 0) return zero;
    const auto rank = std::lower_bound(set.begin(), set.end(), v) - set.begin();
    return s.member(static_cast<std::uint64_t>(rank) + 1);
  };

  for (Vertex v = 0; v < n; ++v) {
    const bool in1 = std::binary_search(V1.begin(), V1.end(), v);
    const bool in2 = std::binary_search(V2.begin(), V2.end(), v);
    FactoredCode<IntegerRing> code;
    if (!in1 && !in2) {
      code = FactoredCode<IntegerRing>::lifted(ring, vandermonde(ring, mu1 + mu2 + v + 1, d));
    } else {
      code = FactoredCode<IntegerRing>::constant(ring, ring.one());
      if (in1) code.append(ring, FactoredCode<IntegerRing>::lifted(ring, member(U, V1, v)));
      if (in2) code.append(ring, FactoredCode<IntegerRing>::lifted(ring, member(W, V2, v)));
    }
    st.codes.push_back(std::move(code));
  }
  build_walk_sums(st, parallel);
  return st;
}

SubspaceCode<Gf2mRing> random_subspace(const Gf2mRing& ring, std::uint64_t seed, std::uint64_t colour, unsigned mu,
                                       unsigned dims) {
  std::vector<CodeVector<Gf2mRing>> basis;
  for (unsigned t = 0; t < mu; ++t) {
    CodeVector<Gf2mRing> v;
    for (unsigned r = 0; r < dims; ++r) {
      v.entries.push_back(prf_sample(*ring.field, seed, {prf_tag::kVertexCode, colour, t, r}));
    }
    basis.push_back(std::move(v));
  }
  return SubspaceCode<Gf2mRing>(ring, std::move(basis));
}

}  // namespace extensor
