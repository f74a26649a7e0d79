#include "extensor/undirected_oracle.hpp"

#include <cmath>
#include <string>

#include "extensor/error.hpp"
#include "extensor/kpath_oracle.hpp"
#include "extensor/prf.hpp"

namespace extensor {

std::pair<unsigned, unsigned> choose_params(unsigned k) {
  if (k == 0) throw DomainError("k must be at least 1");
  const unsigned k1 = (k + 1) / 2;
  // largest k2 with 2 k2 + k <= sqrt(2) k, decided in integers
  unsigned k2 = 0;
  const std::uint64_t bound = 2ULL * k * k;
  while (true) {
    const std::uint64_t next = 2ULL * (k2 + 1) + k;
    if (next * next > bound) break;
    ++k2;
  }
  return {k1, k2};
}

unsigned default_trials(unsigned k, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
  return static_cast<unsigned>(std::ceil(8.0 * std::pow(1.015, k) * std::log(1.0 / delta)));
}

namespace {

using Ext = Extensor<Gf2mRing>;

struct Marked {
  Vertex s;
  Vertex t;
  bool removed;
};

}  // namespace

CodeVector<Gf2mRing> UndirectedOracle::vertex_vector(Vertex v) const {
  CodeVector<Gf2mRing> out = vandermonde(ring_, v + 1, k1_);
  out.entries.resize(dims(), ring_.zero());
  return out;
}

CodeVector<Gf2mRing> UndirectedOracle::edge_vector(Vertex u, Vertex v) const {
  const auto [a, b] = UndirectedGraph::canonical(u, v);
  const std::uint64_t param = static_cast<std::uint64_t>(a) * graph_.num_vertices() + b + 1;
  CodeVector<Gf2mRing> tail = vandermonde(ring_, param, k2_);
  CodeVector<Gf2mRing> out;
  out.entries.assign(k1_, ring_.zero());
  out.entries.insert(out.entries.end(), tail.entries.begin(), tail.entries.end());
  return out;
}

Gf2mElement UndirectedOracle::edge_var(const PartitionState& p, Vertex u, Vertex v) const {
  const auto [a, b] = UndirectedGraph::canonical(u, v);
  return prf_sample(*ring_.field, p.seed, {prf_tag::kEdge, a, b});
}

UPoly UndirectedOracle::apply_vertex(const PartitionState& p, UPoly x, Vertex v) const {
  x = x.shifted();
  if (p.side[v] == 1) {
    const auto vec = vertex_vector(v);
    for (unsigned g = 0; g <= x.degree_bound(); ++g) {
      if (!x[g].is_zero()) x[g] = skew_mul(x[g], vec);
    }
  }
  return x;
}

UPoly UndirectedOracle::apply_edge(const PartitionState& p, UPoly x, Vertex u, Vertex v) const {
  x.scale(edge_var(p, u, v));
  if (p.side[u] == 2 && p.side[v] == 2) {
    const auto vec = edge_vector(u, v);
    for (unsigned g = 0; g <= x.degree_bound(); ++g) {
      if (!x[g].is_zero()) x[g] = skew_mul(x[g], vec);
    }
  }
  return x;
}

void UndirectedOracle::build_trial(PartitionState& p) const {
  const std::uint32_t n = graph_.num_vertices();
  const unsigned D = dims();
  p.vertex_var.resize(n);
  for (Vertex v = 0; v < n; ++v) p.vertex_var[v] = prf_sample(*ring_.field, p.seed, {prf_tag::kVertexVar, v});
  p.Q.assign(static_cast<std::size_t>(n) * n, UPoly(ring_, D, k_));

  // Directed edge 2i is (a, b) of the i-th undirected edge, 2i + 1 its reverse.
  std::vector<Edge> dedges;
  for (const auto& [a, b] : graph_.edges()) {
    dedges.push_back({a, b});
    dedges.push_back({b, a});
  }
  std::vector<Gf2mElement> evar(dedges.size());
  std::vector<CodeVector<Gf2mRing>> evec(dedges.size());
  std::vector<std::uint8_t> ecoded(dedges.size(), 0);
  for (std::size_t e = 0; e < dedges.size(); ++e) {
    const auto [w, v] = dedges[e];
    evar[e] = edge_var(p, w, v);
    if (p.side[w] == 2 && p.side[v] == 2) {
      ecoded[e] = 1;
      evec[e] = edge_vector(w, v);
    }
  }
  std::vector<CodeVector<Gf2mRing>> vvec(n);
  for (Vertex v = 0; v < n; ++v) {
    if (p.side[v] == 1) vvec[v] = vertex_vector(v);
  }
  auto code_vertex = [&](Ext x, Vertex v) { return p.side[v] == 1 ? skew_mul(x, vvec[v]) : x; };

  const Ext zero(ring_, D);
  for (Vertex u = 0; u < n; ++u) {
    std::vector<Ext> curQ(n, zero);
    std::vector<Ext> curB(dedges.size(), zero);
    curQ[u] = code_vertex(Ext::one(ring_, D), u);
    p.Q[u * n + u][1] += curQ[u];
    for (unsigned s = 1; s < k_; ++s) {
      std::vector<Ext> newQ(n, zero);
      std::vector<Ext> newB(dedges.size(), zero);
      bool any = false;
      for (std::size_t e = 0; e < dedges.size(); ++e) {
        const auto [w, v] = dedges[e];
        Ext x = curQ[w];
        if (p.side[w] == 1 && p.side[v] == 2) x -= curB[e ^ 1];
        if (x.is_zero()) continue;
        x.scale(evar[e]);
        if (ecoded[e]) x = skew_mul(x, evec[e]);
        x = code_vertex(std::move(x), v);
        if (x.is_zero()) continue;
        newQ[v] += x;
        newB[e] = std::move(x);
        any = true;
      }
      if (!any) break;
      for (Vertex v = 0; v < n; ++v) p.Q[u * n + v][s + 1] += newQ[v];
      curQ = std::move(newQ);
      curB = std::move(newB);
    }
  }

  p.S.assign(n, UPoly(ring_, D, k_));
  p.Sbold.assign(n, UPoly(ring_, D, k_));
  p.Z = UPoly(ring_, D, k_);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const auto& q = p.Q[u * n + v];
      if (q.is_zero()) continue;
      p.S[u] += q;
      UPoly weighted = q;
      p.Sbold[u] += weighted.scale(p.vertex_var[v]);
    }
    p.Z += p.Sbold[u];
  }
}

void UndirectedOracle::build(bool parallel) {
  parallel_ = parallel;
  const std::uint32_t n = graph_.num_vertices();
  trials_.clear();
  always_yes_ = graph_.num_edges() > static_cast<std::size_t>(k_ + 1) * n;
  if (always_yes_) return;
  trials_.resize(num_trials_);
  for (unsigned t = 0; t < num_trials_; ++t) {
    auto& p = trials_[t];
    p.seed = prf64(seed_, {prf_tag::kTrial, t});
    if (!fixed_sides_.empty()) {
      p.side = fixed_sides_[t];
    } else {
      p.side.resize(n);
      for (Vertex v = 0; v < n; ++v) p.side[v] = 1 + static_cast<std::uint8_t>(prf64(p.seed, {prf_tag::kPartition, v}) & 1U);
    }
  }
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(num_trials_); ++t) build_trial(trials_[t]);
}

UndirectedOracle UndirectedOracle::preprocess(const UndirectedGraph& g, const UndirectedOptions& opts) {
  const auto [k1, k2] = choose_params(opts.k);
  const unsigned trials = opts.trials != 0 ? opts.trials : default_trials(opts.k);
  return make(g, opts, k1, k2, trials, {});
}

UndirectedOracle UndirectedOracle::with_partitions(const UndirectedGraph& g, const UndirectedOptions& opts,
                                                   const std::vector<std::vector<std::uint8_t>>& sides) {
  if (sides.empty()) throw DomainError("at least one partition is required");
  for (const auto& side : sides) {
    if (side.size() != g.num_vertices()) throw DomainError("partition size does not match the graph");
    for (auto s : side) {
      if (s != 1 && s != 2) throw DomainError("partition sides must be 1 or 2");
    }
  }
  const auto [k1, k2] = choose_params(opts.k);
  return make(g, opts, k1, k2, static_cast<unsigned>(sides.size()), sides);
}

UndirectedOracle UndirectedOracle::preprocess_bipartite(const UndirectedGraph& g, const std::vector<std::uint8_t>& side,
                                                        const UndirectedOptions& opts) {
  if (opts.k == 0 || opts.k % 2 != 0) throw CapabilityError("the bipartite oracle needs an even k");
  if (side.size() != g.num_vertices()) throw DomainError("side assignment does not match the graph");
  for (auto s : side) {
    if (s != 1 && s != 2) throw DomainError("sides must be 1 or 2");
  }
  for (const auto& [u, v] : g.edges()) {
    if (side[u] == side[v]) {
      throw DomainError("edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ") lies inside one side");
    }
  }
  const unsigned trials = opts.trials != 0 ? opts.trials : 4;
  auto o = make(g, opts, opts.k / 2, 0, trials, std::vector<std::vector<std::uint8_t>>(trials, side), true);
  return o;
}

UndirectedOracle UndirectedOracle::make(const UndirectedGraph& g, const UndirectedOptions& opts, unsigned k1,
                                        unsigned k2, unsigned trials, std::vector<std::vector<std::uint8_t>> sides,
                                        bool bipartite) {
  if (opts.k == 0) throw DomainError("k must be at least 1");
  UndirectedOracle o;
  o.graph_ = g;
  o.k_ = opts.k;
  o.k1_ = k1;
  o.k2_ = k2;
  check_dims(o.dims());
  const std::uint64_t n = g.num_vertices();
  o.ring_ = Gf2mRing(make_field(opts.field_degree, opts.k, n * n + 2));
  o.seed_ = opts.seed;
  o.bipartite_ = bipartite;
  o.num_trials_ = trials;
  o.fixed_sides_ = std::move(sides);
  o.build(opts.parallel);
  return o;
}

Gf2mElement UndirectedOracle::trial_witness(const PartitionState& p, const UpdateBatch& nb) const {
  const std::uint32_t n = graph_.num_vertices();
  const unsigned D = dims();
  const std::uint32_t full = (1U << D) - 1;
  auto top = [&](const UPoly& x, const UPoly& y) {
    Gf2mElement acc{};
    for (unsigned a = 0; a <= k_; ++a) {
      if (x[a].is_zero() || y[k_ - a].is_zero()) continue;
      Gf2mRing::add_to(acc, wedge_coefficient(x[a], y[k_ - a], full));
    }
    return acc;
  };

  Gf2mElement witness = p.Z[k_][full];
  std::vector<Marked> marked;
  for (const auto& [u, v] : nb.inserts) {
    marked.push_back({u, v, false});
    marked.push_back({v, u, false});
  }
  for (const auto& [u, v] : nb.deletes) {
    marked.push_back({u, v, true});
    marked.push_back({v, u, true});
  }
  if (marked.empty()) return witness;

  auto Q = [&](Vertex a, Vertex b) -> const UPoly& { return p.Q[a * n + b]; };
  auto v1 = [&](Vertex v) { return p.side[v] == 1; };
  auto v2 = [&](Vertex v) { return p.side[v] == 2; };
  // x * chi(a) * chi(ab)
  auto vertex_edge = [&](const UPoly& x, Vertex a, Vertex b) { return apply_edge(p, apply_vertex(p, x, a), a, b); };
  auto signed_edge = [&](UPoly x, const Marked& e) {
    x = apply_edge(p, std::move(x), e.s, e.t);
    if (e.removed) {
      UPoly neg(ring_, D, k_);
      neg -= x;
      return neg;
    }
    return x;
  };

  const std::size_t M = marked.size();
  std::vector<UPoly> head;
  std::vector<UPoly> tail;
  for (const auto& e : marked) {
    // walks ending at s, weighted by the first vertex, that may continue along (s, t)
    UPoly h = p.Sbold[e.s];
    if (e.removed && v1(e.s) && v2(e.t)) h -= vertex_edge(p.Sbold[e.t], e.s, e.t);
    head.push_back(std::move(h));
    // walks starting at t that may be entered along (s, t)
    UPoly tl = p.S[e.t];
    if (e.removed && v1(e.t) && v2(e.s)) tl -= vertex_edge(p.S[e.s], e.t, e.s);
    tail.push_back(std::move(tl));
  }
  std::vector<UPoly> mid;
  mid.reserve(M * M);
  for (const auto& e : marked) {
    const bool front = e.removed && v1(e.t) && v2(e.s);
    for (const auto& f : marked) {
      const bool back = f.removed && v1(f.s) && v2(f.t);
      UPoly m = Q(e.t, f.s);
      if (front) m -= vertex_edge(Q(e.s, f.s), e.t, e.s);
      if (back) m -= vertex_edge(Q(e.t, f.t), f.s, f.t);
      if (front && back) m += vertex_edge(vertex_edge(Q(e.s, f.t), e.t, e.s), f.s, f.t);
      if (f.s == e.t && f.t == e.s && v1(e.t) && v2(e.s)) {
        m -= apply_vertex(p, UPoly::one(ring_, D, k_), e.t);
      }
      mid.push_back(std::move(m));
    }
  }

  std::vector<UPoly> P;
  for (std::size_t e = 0; e < M; ++e) P.push_back(signed_edge(head[e], marked[e]));
  for (unsigned j = 1; j < k_; ++j) {
    bool any = false;
    for (std::size_t e = 0; e < M; ++e) {
      if (P[e].is_zero()) continue;
      any = true;
      Gf2mRing::add_to(witness, top(P[e], tail[e]));
    }
    if (!any || j + 1 == k_) break;
    std::vector<UPoly> next(M, UPoly(ring_, D, k_));
    for (std::size_t f = 0; f < M; ++f) {
      UPoly acc(ring_, D, k_);
      for (std::size_t e = 0; e < M; ++e) {
        if (P[e].is_zero() || mid[e * M + f].is_zero()) continue;
        acc += P[e].times(mid[e * M + f]);
      }
      if (!acc.is_zero()) next[f] = signed_edge(std::move(acc), marked[f]);
    }
    P = std::move(next);
  }
  return witness;
}

std::vector<Gf2mElement> UndirectedOracle::trial_witnesses(const UpdateBatch& batch, Validation validation) const {
  const UpdateBatch nb = batch.normalized(graph_, validation);
  if (bipartite_) {
    for (const auto& [u, v] : nb.inserts) {
      if (fixed_sides_.front()[u] == fixed_sides_.front()[v]) throw DomainError("inserted edge lies inside one side");
    }
  }
  std::vector<Gf2mElement> out(trials_.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel_)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials_.size()); ++t) out[t] = trial_witness(trials_[t], nb);
  return out;
}

bool UndirectedOracle::fallback_answer(const UpdateBatch& nb) const {
  const UndirectedGraph g = nb.apply(graph_);
  const std::uint64_t n = g.num_vertices();
  if (k_ == 1) return n > 0;
  // Erdos-Gallai: more than (k - 2) n / 2 edges force a path on k vertices.
  if (2 * static_cast<std::uint64_t>(g.num_edges()) > static_cast<std::uint64_t>(k_ - 2) * n) return true;
  UndirectedOracle o = *this;
  o.graph_ = g;
  o.build(parallel_);
  return o.static_answer();
}

bool UndirectedOracle::query(const UpdateBatch& batch, Validation validation) const {
  if (always_yes_) return fallback_answer(batch.normalized(graph_, validation));
  for (const auto& w : trial_witnesses(batch, validation)) {
    if (w.bits != 0) return true;
  }
  return false;
}

bool UndirectedOracle::static_answer() const {
  if (always_yes_) return fallback_answer(UpdateBatch{});
  const std::uint32_t full = (1U << dims()) - 1;
  for (const auto& p : trials_) {
    if (p.Z[k_][full].bits != 0) return true;
  }
  return false;
}

UndirectedOracle UndirectedOracle::recompute(const UpdateBatch& batch) const {
  const UpdateBatch nb = batch.normalized(graph_);
  UndirectedOracle o = *this;
  o.graph_ = nb.apply(graph_);
  o.build(parallel_);
  return o;
}

}  // namespace extensor
