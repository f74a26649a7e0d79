#include "extensor/kpath_oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "extensor/error.hpp"
#include "extensor/prf.hpp"
#include "extensor/walk_kernels.hpp"

namespace extensor {

template <class Ring>
typename Ring::value_type KPathState<Ring>::edge_weight(Vertex u, Vertex v) const {
  if constexpr (std::is_same_v<Ring, Gf2mRing>) {
    if (!unit_weights) return prf_sample(*ring.field, seed, {prf_tag::kEdge, u, v});
  }
  return ring.one();
}

template <class Ring>
std::vector<Edge> KPathState<Ring>::internal_edges(Vertex u, Vertex v) const {
  switch (embedding) {
    case Embedding::kIdentity:
      return {{u, v}};
    case Embedding::kSplit:
      return {{2 * u + 1, 2 * v}};
    case Embedding::kTwoCopy:
      return {{u, v}, {u, n() + v}, {n() + u, v}};
  }
  throw DomainError("unknown embedding");
}

template struct KPathState<Gf2mRing>;
template struct KPathState<IntegerRing>;

std::shared_ptr<const Gf2mField> make_field(unsigned degree, unsigned k, std::uint64_t codes) {
  const unsigned required = Gf2mField::required_degree(k, codes);
  if (degree < required) {
    throw CapabilityError("field degree " + std::to_string(degree) + " too small; need at least " +
                          std::to_string(required));
  }
  return std::make_shared<const Gf2mField>(degree);
}

CodeVector<Gf2mRing> random_code(const Gf2mRing& ring, std::uint64_t seed, std::uint64_t vertex, unsigned dims) {
  CodeVector<Gf2mRing> v;
  v.entries.reserve(dims);
  for (unsigned t = 0; t < dims; ++t) v.entries.push_back(prf_sample(*ring.field, seed, {prf_tag::kVertexCode, vertex, t}));
  return v;
}

namespace {

void check_k(unsigned k) {
  if (k == 0) throw DomainError("k must be at least 1");
}

DirectedGraph split_graph(const DirectedGraph& g) {
  DirectedGraph out(2 * g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) out.add_edge(2 * v, 2 * v + 1);
  for (const auto& [u, v] : g.edges()) out.add_edge(2 * u + 1, 2 * v);
  return out;
}

/// Lays out codes, start set and internal graph for the identity or split embedding.
template <class Ring, class CodeOf>
void embed(KPathState<Ring>& st, const DirectedGraph& g, bool split, CodeOf code_of) {
  st.graph = g;
  const auto n = g.num_vertices();
  if (split) {
    st.embedding = Embedding::kSplit;
    st.internal = split_graph(g);
    st.max_len = 2 * st.k + 1;
    st.codes.clear();
    st.start_eligible.assign(2 * n, 0);
    for (Vertex v = 0; v < n; ++v) {
      st.codes.push_back(FactoredCode<Ring>::constant(st.ring, st.ring.one()));
      st.codes.push_back(code_of(v));
      st.start_eligible[2 * v] = 1;
    }
  } else {
    st.embedding = Embedding::kIdentity;
    st.internal = g;
    st.max_len = st.k;
    st.codes.clear();
    for (Vertex v = 0; v < n; ++v) st.codes.push_back(code_of(v));
    st.start_eligible.assign(n, 1);
  }
}

template <class Ring>
using Poly = TruncatedPoly<Ring>;

template <class Ring>
Poly<Ring> load(const KPathState<Ring>& st, const typename Ring::value_type* src) {
  Poly<Ring> p(st.ring, st.dims, st.grades() - 1);
  const std::size_t size = st.ext_size();
  for (unsigned g = 0; g < st.grades(); ++g) {
    std::copy(src + g * size, src + (g + 1) * size, p[g].data());
  }
  return p;
}

template <class Ring>
void add_scaled(Poly<Ring>& acc, const Poly<Ring>& x, const typename Ring::value_type& c) {
  for (unsigned g = 0; g <= acc.degree_bound(); ++g) acc[g].add_scaled(x[g], c);
}

/// sum_{A nonempty} (-1)^{C(|A|,2)} [e_{A u (A + h)}]x with h = dims / 2.
template <class Ring>
typename Ring::value_type diagonal_witness(const Ring& ring, unsigned dims, const typename Ring::value_type* x) {
  const unsigned h = dims / 2;
  auto acc = ring.zero();
  for (std::uint32_t A = 1; A < (1U << h); ++A) {
    const auto& c = x[A | (A << h)];
    if (Ring::is_zero(c)) continue;
    const unsigned m = static_cast<unsigned>(std::popcount(A));
    if ((m * (m - 1) / 2) % 2 == 1) {
      Ring::sub_from(acc, c);
    } else {
      Ring::add_to(acc, c);
    }
  }
  return acc;
}

/// Certifying coefficient of the product x ^ y.
template <class Ring>
typename Ring::value_type target_of_product(const KPathState<Ring>& st, const Poly<Ring>& x, const Poly<Ring>& y) {
  const Ring& ring = st.ring;
  auto acc = ring.zero();
  const unsigned tg = st.graded ? st.target_grade : 0;
  if (st.target == Target::kTop) {
    const std::uint32_t full = static_cast<std::uint32_t>(st.ext_size() - 1);
    for (unsigned a = 0; a <= tg; ++a) {
      if (x[a].is_zero() || y[tg - a].is_zero()) continue;
      Ring::add_to(acc, wedge_coefficient(x[a], y[tg - a], full));
    }
    return acc;
  }
  Extensor<Ring> prod(ring, st.dims);
  for (unsigned a = 0; a <= tg; ++a) {
    if (x[a].is_zero() || y[tg - a].is_zero()) continue;
    prod += wedge(x[a], y[tg - a]);
  }
  return diagonal_witness(ring, st.dims, prod.data());
}

}  // namespace

template <class Ring>
void build_walk_sums(KPathState<Ring>& state, bool parallel) {
  check_dims(state.dims);
  if (state.codes.size() != state.internal_n() || state.start_eligible.size() != state.internal_n()) {
    throw DomainError("codes and start set must cover every internal vertex");
  }
  if (parallel) {
    propagate_walks_parallel(state);
  } else {
    propagate_walks_serial(state);
  }
}

RandomizedState preprocess_randomized(const DirectedGraph& g, const KPathOptions& opts) {
  check_k(opts.k);
  check_dims(opts.k);
  RandomizedState st;
  st.ring = Gf2mRing(make_field(opts.field_degree, opts.k, 0));
  st.mode = Mode::kRandomized;
  st.k = opts.k;
  st.dims = opts.k;
  st.seed = opts.seed;
  st.unit_weights = false;
  embed(st, g, opts.vertex_failures, [&](Vertex v) {
    return FactoredCode<Gf2mRing>::vector(st.ring, random_code(st.ring, opts.seed, v, opts.k));
  });
  build_walk_sums(st, opts.parallel);
  return st;
}

DeterministicState preprocess_deterministic(const DirectedGraph& g, const KPathOptions& opts) {
  check_k(opts.k);
  check_dims(2 * opts.k);
  DeterministicState st;
  st.mode = Mode::kDeterministic;
  st.k = opts.k;
  st.dims = 2 * opts.k;
  st.seed = opts.seed;
  st.unit_weights = true;
  embed(st, g, opts.vertex_failures, [&](Vertex v) {
    return FactoredCode<IntegerRing>::lifted(st.ring, vandermonde(st.ring, v + 1, opts.k));
  });
  build_walk_sums(st, opts.parallel);
  return st;
}

AnyKPathState preprocess(const DirectedGraph& g, const KPathOptions& opts) {
  if (opts.mode == Mode::kRandomized) return preprocess_randomized(g, opts);
  return preprocess_deterministic(g, opts);
}

template <class Ring>
KPathState<Ring> recompute_internal(const KPathState<Ring>& state, const DirectedGraph& internal, bool parallel) {
  KPathState<Ring> st;
  st.ring = state.ring;
  st.mode = state.mode;
  st.embedding = state.embedding;
  st.target = state.target;
  st.k = state.k;
  st.dims = state.dims;
  st.max_len = state.max_len;
  st.graded = state.graded;
  st.target_grade = state.target_grade;
  st.seed = state.seed;
  st.unit_weights = state.unit_weights;
  st.graph = state.graph;
  st.internal = internal;
  st.codes = state.codes;
  st.start_eligible = state.start_eligible;
  build_walk_sums(st, parallel);
  return st;
}

template <class Ring>
KPathState<Ring> recompute(const KPathState<Ring>& state, const UpdateBatch& batch, bool parallel) {
  const UpdateBatch nb = batch.normalized(state.graph);
  DirectedGraph internal = state.internal;
  for (const auto& we : internal_delta(state, nb)) {
    if (state.internal.has_edge(we.from, we.to)) {
      internal.remove_edge(we.from, we.to);
    } else {
      internal.add_edge(we.from, we.to);
    }
  }
  auto st = recompute_internal(state, internal, parallel);
  st.graph = nb.apply(state.graph);
  return st;
}

template <class Ring>
typename Ring::value_type static_witness(const KPathState<Ring>& state) {
  const std::size_t size = state.ext_size();
  const unsigned tg = state.graded ? state.target_grade : 0;
  const auto* z = state.Z.data() + tg * size;
  if (state.target == Target::kTop) return z[size - 1];
  return diagonal_witness(state.ring, state.dims, z);
}

template <class Ring>
std::vector<WeightedEdge<Ring>> internal_delta(const KPathState<Ring>& state, const UpdateBatch& batch) {
  std::vector<WeightedEdge<Ring>> out;
  for (const auto& [u, v] : batch.inserts) {
    for (const auto& [a, b] : state.internal_edges(u, v)) out.push_back({a, b, state.edge_weight(a, b)});
  }
  for (const auto& [u, v] : batch.deletes) {
    for (const auto& [a, b] : state.internal_edges(u, v)) out.push_back({a, b, Ring::neg(state.edge_weight(a, b))});
  }
  if (!batch.vertex_failures.empty() && state.embedding != Embedding::kSplit) {
    throw CapabilityError("vertex failures require a state preprocessed with vertex-failure support");
  }
  for (Vertex v : batch.vertex_failures) {
    out.push_back({2 * v, 2 * v + 1, Ring::neg(state.edge_weight(2 * v, 2 * v + 1))});
  }
  return out;
}

template <class Ring>
QueryResult<Ring> query(const KPathState<Ring>& state, const UpdateBatch& batch, Validation validation) {
  const auto delta = internal_delta(state, batch.normalized(state.graph, validation));
  auto witness = static_witness(state);
  if (!delta.empty()) {
    std::map<Vertex, std::size_t> src_index;
    std::map<Vertex, std::size_t> dst_index;
    for (const auto& e : delta) {
      src_index.emplace(e.from, src_index.size());
      dst_index.emplace(e.to, dst_index.size());
    }
    std::vector<Vertex> srcs(src_index.size());
    std::vector<Vertex> dsts(dst_index.size());
    for (const auto& [v, i] : src_index) srcs[i] = v;
    for (const auto& [v, i] : dst_index) dsts[i] = v;

    std::vector<Poly<Ring>> F;
    for (Vertex a : srcs) F.push_back(load(state, state.f(a)));
    std::vector<Poly<Ring>> S;
    for (Vertex b : dsts) S.push_back(load(state, state.s(b)));
    // Qbc[b][c]: walks from an edge head b to an edge tail c.
    std::vector<Poly<Ring>> Qbc;
    for (Vertex b : dsts) {
      for (Vertex c : srcs) Qbc.push_back(load(state, state.q(b, c)));
    }

    const unsigned bound = state.grades() - 1;
    std::vector<Poly<Ring>> T(srcs.size(), Poly<Ring>(state.ring, state.dims, bound));
    for (const auto& e : delta) add_scaled(T[src_index[e.from]], S[dst_index[e.to]], e.weight);

    for (unsigned i = 1; i <= state.max_len; ++i) {
      bool any = false;
      for (std::size_t a = 0; a < srcs.size(); ++a) {
        if (T[a].is_zero()) continue;
        any = true;
        Ring::add_to(witness, target_of_product(state, F[a], T[a]));
      }
      if (!any || i == state.max_len) break;
      std::vector<Poly<Ring>> U(dsts.size(), Poly<Ring>(state.ring, state.dims, bound));
      for (std::size_t b = 0; b < dsts.size(); ++b) {
        for (std::size_t c = 0; c < srcs.size(); ++c) {
          if (T[c].is_zero()) continue;
          U[b] += Qbc[b * srcs.size() + c].times(T[c]);
        }
      }
      std::vector<Poly<Ring>> next(srcs.size(), Poly<Ring>(state.ring, state.dims, bound));
      for (const auto& e : delta) add_scaled(next[src_index[e.from]], U[dst_index[e.to]], e.weight);
      T = std::move(next);
    }
  }
  QueryResult<Ring> r;
  r.answer = !Ring::is_zero(witness);
  r.witness = std::move(witness);
  return r;
}

template <class Ring>
UpdatedPairs<Ring> query_updated_pairs(const KPathState<Ring>& state, const UpdateBatch& batch, Validation validation) {
  const auto delta = internal_delta(state, batch.normalized(state.graph, validation));
  UpdatedPairs<Ring> out;
  for (const auto& e : delta) {
    out.vertices.push_back(e.from);
    out.vertices.push_back(e.to);
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  const std::size_t m = out.vertices.size();
  std::map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index[out.vertices[i]] = i;

  std::vector<Poly<Ring>> Qp;
  for (Vertex x : out.vertices) {
    for (Vertex y : out.vertices) Qp.push_back(load(state, state.q(x, y)));
  }
  std::vector<Poly<Ring>> total = Qp;
  std::vector<Poly<Ring>> M = Qp;
  for (unsigned i = 1; i <= state.max_len; ++i) {
    std::vector<Poly<Ring>> next(m * m, Poly<Ring>(state.ring, state.dims, state.grades() - 1));
    bool any = false;
    for (std::size_t x = 0; x < m; ++x) {
      for (const auto& e : delta) {
        const auto& left = M[x * m + index[e.from]];
        if (left.is_zero()) continue;
        for (std::size_t y = 0; y < m; ++y) {
          const auto& right = Qp[index[e.to] * m + y];
          if (right.is_zero()) continue;
          auto prod = left.times(right);
          add_scaled(next[x * m + y], prod, e.weight);
          any = true;
        }
      }
    }
    if (!any) break;
    for (std::size_t t = 0; t < m * m; ++t) total[t] += next[t];
    M = std::move(next);
  }
  for (const auto& p : total) {
    Extensor<Ring> flat(state.ring, state.dims);
    for (unsigned g = 0; g <= p.degree_bound(); ++g) flat += p[g];
    out.entries.push_back(std::move(flat));
  }
  return out;
}

bool query_answer(const AnyKPathState& state, const UpdateBatch& batch, Validation validation) {
  return std::visit([&](const auto& st) { return query(st, batch, validation).answer; }, state);
}

bool static_answer(const AnyKPathState& state) {
  return std::visit([](const auto& st) { return static_answer(st); }, state);
}

AmplifiedOracle::AmplifiedOracle(const DirectedGraph& g, KPathOptions opts, unsigned repetitions) {
  if (repetitions == 0) throw DomainError("at least one repetition is required");
  const std::uint64_t base = opts.seed;
  for (unsigned r = 0; r < repetitions; ++r) {
    opts.seed = r == 0 ? base : prf64(base, {prf_tag::kTrial, r});
    states_.push_back(preprocess_randomized(g, opts));
  }
}

bool AmplifiedOracle::query(const UpdateBatch& batch) const {
  for (const auto& st : states_) {
    if (extensor::query(st, batch).answer) return true;
  }
  return false;
}

#define EXTENSOR_INSTANTIATE(R)                                                                         \
  template void build_walk_sums(KPathState<R>&, bool);                                                  \
  template KPathState<R> recompute_internal(const KPathState<R>&, const DirectedGraph&, bool);          \
  template KPathState<R> recompute(const KPathState<R>&, const UpdateBatch&, bool);                     \
  template R::value_type static_witness(const KPathState<R>&);                                          \
  template std::vector<WeightedEdge<R>> internal_delta(const KPathState<R>&, const UpdateBatch&);       \
  template QueryResult<R> query(const KPathState<R>&, const UpdateBatch&, Validation);                  \
  template UpdatedPairs<R> query_updated_pairs(const KPathState<R>&, const UpdateBatch&, Validation);

EXTENSOR_INSTANTIATE(Gf2mRing)
EXTENSOR_INSTANTIATE(IntegerRing)

#undef EXTENSOR_INSTANTIATE

}  // namespace extensor
