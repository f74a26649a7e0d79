#pragma once

#include <cstdint>
#include <vector>

#include <omp.h>

#include "extensor/kpath_oracle.hpp"

namespace extensor {

/// Out-edges of each internal vertex with their edge variables.
template <class Ring>
struct WeightedAdjacency {
  std::vector<std::size_t> offsets;
  std::vector<Vertex> targets;
  std::vector<typename Ring::value_type> weights;

  explicit WeightedAdjacency(const KPathState<Ring>& state) {
    const auto n = state.internal_n();
    offsets.assign(n + 1, 0);
    for (const auto& e : state.internal.edges()) ++offsets[e.first + 1];
    for (std::uint32_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
    targets.resize(state.internal.num_edges());
    weights.resize(state.internal.num_edges());
    std::vector<std::size_t> pos(offsets.begin(), offsets.end() - 1);
    for (const auto& [u, v] : state.internal.edges()) {
      targets[pos[u]] = v;
      weights[pos[u]] = state.edge_weight(u, v);
      ++pos[u];
    }
  }
};

/// Scratch buffers for one source row.
template <class Ring>
struct WalkWorkspace {
  using value_type = typename Ring::value_type;
  std::vector<value_type> cur;
  std::vector<value_type> acc;
  std::vector<value_type> unit;
  std::vector<value_type> scratch;
  std::vector<std::uint8_t> mark;
  std::vector<Vertex> active;
  std::vector<Vertex> next;

  explicit WalkWorkspace(const KPathState<Ring>& state)
      : cur(state.internal_n() * state.ext_size(), state.ring.zero()),
        acc(state.internal_n() * state.ext_size(), state.ring.zero()),
        unit(state.ext_size(), state.ring.zero()),
        scratch(state.ext_size(), state.ring.zero()),
        mark(state.internal_n(), 0) {
    unit[0] = state.ring.one();
  }
};

inline bool all_zero_span(const auto* x, std::size_t size, const auto& is_zero) {
  for (std::size_t i = 0; i < size; ++i) {
    if (!is_zero(x[i])) return false;
  }
  return true;
}

/// Fills row Q[i][*] by propagating walks that start at internal vertex i.
template <class Ring>
void walk_row(KPathState<Ring>& state, const WeightedAdjacency<Ring>& adj, std::uint32_t i, WalkWorkspace<Ring>& ws) {
  using V = typename Ring::value_type;
  const Ring& ring = state.ring;
  const std::size_t size = state.ext_size();
  const auto is_zero = [](const V& x) { return Ring::is_zero(x); };
  const V one = ring.one();

  ws.active.clear();
  state.codes[i].apply_raw(ring, state.dims, ws.unit.data(), ws.cur.data() + i * size, ws.scratch.data());
  if (!all_zero_span(ws.cur.data() + i * size, size, is_zero)) ws.active.push_back(i);

  for (unsigned s = 1; s <= state.max_len && !ws.active.empty(); ++s) {
    const std::size_t grade_off = state.graded ? s * size : 0;
    for (Vertex j : ws.active) ring.axpy(state.q(i, j) + grade_off, ws.cur.data() + j * size, size, one);
    if (s == state.max_len) break;

    ws.next.clear();
    for (Vertex r : ws.active) {
      const V* src = ws.cur.data() + r * size;
      for (std::size_t e = adj.offsets[r]; e < adj.offsets[r + 1]; ++e) {
        const Vertex j = adj.targets[e];
        V* dst = ws.acc.data() + j * size;
        if (!ws.mark[j]) {
          ws.mark[j] = 1;
          ws.next.push_back(j);
          for (std::size_t t = 0; t < size; ++t) dst[t] = ring.zero();
        }
        ring.axpy(dst, src, size, adj.weights[e]);
      }
    }
    ws.active.clear();
    for (Vertex j : ws.next) {
      ws.mark[j] = 0;
      V* out = ws.cur.data() + j * size;
      state.codes[j].apply_raw(ring, state.dims, ws.acc.data() + j * size, out, ws.scratch.data());
      if (!all_zero_span(out, size, is_zero)) ws.active.push_back(j);
    }
  }
}

/// S, F and Z from a filled Q.
template <class Ring>
void reduce_walk_sums(KPathState<Ring>& state, bool parallel) {
  const auto n = state.internal_n();
  const std::size_t stride = state.stride();
  const Ring& ring = state.ring;
  const auto one = ring.one();
  state.S.assign(n * stride, ring.zero());
  state.F.assign(n * stride, ring.zero());
  state.Z.assign(stride, ring.zero());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(n); ++ii) {
    const auto i = static_cast<std::uint32_t>(ii);
    for (std::uint32_t j = 0; j < n; ++j) {
      ring.axpy(state.S.data() + i * stride, state.q(i, j), stride, one);
      if (state.start_eligible[j]) ring.axpy(state.F.data() + i * stride, state.q(j, i), stride, one);
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (state.start_eligible[i]) ring.axpy(state.Z.data(), state.S.data() + i * stride, stride, one);
  }
}

/// Reference implementation: one source row after another.
template <class Ring>
void propagate_walks_serial(KPathState<Ring>& state) {
  const auto n = state.internal_n();
  state.Q.assign(static_cast<std::size_t>(n) * n * state.stride(), state.ring.zero());
  WeightedAdjacency<Ring> adj(state);
  WalkWorkspace<Ring> ws(state);
  for (std::uint32_t i = 0; i < n; ++i) walk_row(state, adj, i, ws);
  reduce_walk_sums(state, false);
}

/// Source rows are independent; each thread owns a workspace and writes disjoint rows of Q.
template <class Ring>
void propagate_walks_parallel(KPathState<Ring>& state) {
  const auto n = state.internal_n();
  state.Q.assign(static_cast<std::size_t>(n) * n * state.stride(), state.ring.zero());
  WeightedAdjacency<Ring> adj(state);
#pragma omp parallel
  {
    WalkWorkspace<Ring> ws(state);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      walk_row(state, adj, static_cast<std::uint32_t>(i), ws);
    }
  }
  reduce_walk_sums(state, true);
}

}  // namespace extensor
