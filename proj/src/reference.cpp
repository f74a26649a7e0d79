#include "extensor/reference.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <string>

#include "extensor/error.hpp"

namespace extensor::reference {

namespace {

void guard(bool ok, const char* what) {
  if (!ok) throw CapabilityError(std::string("instance too large for brute force: ") + what);
}

std::vector<std::uint8_t> full_mask(std::uint32_t n, const std::vector<std::uint8_t>& alive) {
  if (alive.empty()) return std::vector<std::uint8_t>(n, 1);
  if (alive.size() != n) throw DomainError("alive mask size does not match the graph");
  return alive;
}

SetList normalized(const SetList& sets) {
  SetList out;
  for (auto s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

void guard_sets(const SetList& sets, unsigned k) {
  guard(sets.size() <= kMaxSets, "too many sets");
  guard(k <= 4 * kMaxK, "k too large");
}

bool disjoint(const std::vector<Element>& a, const std::set<Element>& used) {
  return std::none_of(a.begin(), a.end(), [&](Element x) { return used.count(x) != 0; });
}

/// Universe elements of the sets as bit positions.
std::vector<std::uint64_t> to_bits(const SetList& sets) {
  std::vector<Element> all;
  for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  guard(all.size() <= 64, "too many distinct elements");
  std::vector<std::uint64_t> bits;
  for (const auto& s : sets) {
    std::uint64_t b = 0;
    for (Element x : s) b |= std::uint64_t{1} << (std::lower_bound(all.begin(), all.end(), x) - all.begin());
    bits.push_back(b);
  }
  return bits;
}

}  // namespace

// ---------------------------------------------------------------------------
// k-path

std::uint64_t bf_kpath_count(const DirectedGraph& g, unsigned k, const std::vector<std::uint8_t>& alive) {
  const auto n = g.num_vertices();
  guard(n <= kMaxPathVertices, "more than 14 vertices");
  if (k == 0) return 0;
  const auto live = full_mask(n, alive);
  const auto adj = g.out_adjacency();
  std::vector<std::uint8_t> on(n, 0);
  std::function<std::uint64_t(Vertex, unsigned)> dfs = [&](Vertex v, unsigned len) -> std::uint64_t {
    if (len == k) return 1;
    std::uint64_t total = 0;
    on[v] = 1;
    for (Vertex w : adj[v]) {
      if (live[w] && !on[w]) total += dfs(w, len + 1);
    }
    on[v] = 0;
    return total;
  };
  std::uint64_t total = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (live[v]) total += dfs(v, 1);
  }
  return total;
}

bool bf_kpath(const DirectedGraph& g, unsigned k, const std::vector<std::uint8_t>& alive) {
  return bf_kpath_count(g, k, alive) != 0;
}

std::uint64_t bf_kpath_count_dp(const DirectedGraph& g, unsigned k, const std::vector<std::uint8_t>& alive) {
  const auto n = g.num_vertices();
  guard(n <= kMaxPathVertices, "more than 14 vertices");
  if (k == 0 || k > n) return 0;
  const auto live = full_mask(n, alive);
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint64_t> dp(states * n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (live[v]) dp[(std::size_t{1} << v) * n + v] = 1;
  }
  std::uint64_t total = 0;
  for (std::size_t mask = 1; mask < states; ++mask) {
    const auto size = static_cast<unsigned>(std::popcount(mask));
    if (size > k) continue;
    for (Vertex v = 0; v < n; ++v) {
      const auto c = dp[mask * n + v];
      if (c == 0) continue;
      if (size == k) {
        total += c;
        continue;
      }
      for (Vertex w = 0; w < n; ++w) {
        if (!live[w] || (mask >> w & 1U) || !g.has_edge(v, w)) continue;
        dp[(mask | (std::size_t{1} << w)) * n + w] += c;
      }
    }
  }
  return total;
}

bool bf_kpath(const UndirectedGraph& g, unsigned k) { return bf_kpath(g.bidirected(), k); }

// ---------------------------------------------------------------------------
// set systems

bool bf_exact_cover(const SetList& raw, unsigned k) {
  guard_sets(raw, k);
  const auto sets = normalized(raw);
  std::set<Element> used;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (used.size() == k) return true;
    if (i == sets.size() || used.size() > k) return false;
    if (rec(i + 1)) return true;
    if (!disjoint(sets[i], used)) return false;
    used.insert(sets[i].begin(), sets[i].end());
    const bool ok = rec(i + 1);
    for (Element x : sets[i]) used.erase(x);
    return ok;
  };
  return k > 0 && rec(0);
}

bool bf_exact_cover_bitmask(const SetList& raw, unsigned k) {
  guard_sets(raw, k);
  const auto bits = to_bits(normalized(raw));
  for (std::uint32_t pick = 1; pick < (1U << bits.size()); ++pick) {
    std::uint64_t uni = 0;
    bool ok = true;
    for (std::size_t i = 0; i < bits.size() && ok; ++i) {
      if (!(pick >> i & 1U)) continue;
      ok = (uni & bits[i]) == 0;
      uni |= bits[i];
    }
    if (ok && static_cast<unsigned>(std::popcount(uni)) == k) return true;
  }
  return false;
}

std::optional<unsigned> bf_partial_cover_min(const SetList& raw, unsigned k) {
  guard_sets(raw, k);
  const auto sets = normalized(raw);
  for (unsigned t = 1; t <= sets.size(); ++t) {
    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
      if (chosen.size() == t) {
        std::set<Element> uni;
        for (auto i : chosen) uni.insert(sets[i].begin(), sets[i].end());
        return uni.size() >= k;
      }
      for (std::size_t i = start; i < sets.size(); ++i) {
        chosen.push_back(i);
        const bool ok = rec(i + 1);
        chosen.pop_back();
        if (ok) return true;
      }
      return false;
    };
    if (rec(0)) return t;
  }
  return std::nullopt;
}

std::optional<unsigned> bf_partial_cover_min_bitmask(const SetList& raw, unsigned k) {
  guard_sets(raw, k);
  const auto bits = to_bits(normalized(raw));
  std::optional<unsigned> best;
  for (std::uint32_t pick = 1; pick < (1U << bits.size()); ++pick) {
    std::uint64_t uni = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (pick >> i & 1U) uni |= bits[i];
    }
    const auto t = static_cast<unsigned>(std::popcount(pick));
    if (static_cast<unsigned>(std::popcount(uni)) >= k && (!best || t < *best)) best = t;
  }
  return best;
}

std::uint64_t bf_packing_count(const SetList& raw, unsigned m, unsigned k) {
  guard_sets(raw, m * k);
  const auto sets = normalized(raw);
  std::set<Element> used;
  std::function<std::uint64_t(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) -> std::uint64_t {
    if (left == 0) return 1;
    if (i == sets.size()) return 0;
    std::uint64_t total = rec(i + 1, left);
    if (sets[i].size() == m && disjoint(sets[i], used)) {
      used.insert(sets[i].begin(), sets[i].end());
      total += rec(i + 1, left - 1);
      for (Element x : sets[i]) used.erase(x);
    }
    return total;
  };
  return k == 0 ? 1 : rec(0, k);
}

std::uint64_t bf_packing_count_bitmask(const SetList& raw, unsigned m, unsigned k) {
  guard_sets(raw, m * k);
  const auto sets = normalized(raw);
  const auto bits = to_bits(sets);
  std::uint64_t count = 0;
  for (std::uint32_t pick = 0; pick < (1U << bits.size()); ++pick) {
    if (static_cast<unsigned>(std::popcount(pick)) != k) continue;
    std::uint64_t uni = 0;
    bool ok = true;
    for (std::size_t i = 0; i < bits.size() && ok; ++i) {
      if (!(pick >> i & 1U)) continue;
      ok = sets[i].size() == m && (uni & bits[i]) == 0;
      uni |= bits[i];
    }
    if (ok) ++count;
  }
  return count;
}

bool bf_packing(const SetList& sets, unsigned m, unsigned k) { return bf_packing_count(sets, m, k) != 0; }

// ---------------------------------------------------------------------------
// dominating set

namespace {

std::vector<std::set<Vertex>> closed_neighbourhoods(const UndirectedGraph& g, const std::vector<std::uint8_t>& live) {
  std::vector<std::set<Vertex>> nb(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (live[v]) nb[v].insert(v);
  }
  for (const auto& [a, b] : g.edges()) {
    if (live[a] && live[b]) {
      nb[a].insert(b);
      nb[b].insert(a);
    }
  }
  return nb;
}

}  // namespace

std::optional<unsigned> bf_tdom(const UndirectedGraph& g, unsigned t, const std::vector<std::uint8_t>& alive) {
  const auto n = g.num_vertices();
  guard(n <= kMaxVertices, "more than 12 vertices");
  const auto live = full_mask(n, alive);
  const auto nb = closed_neighbourhoods(g, live);
  std::vector<Vertex> cand;
  for (Vertex v = 0; v < n; ++v) {
    if (live[v]) cand.push_back(v);
  }
  for (unsigned size = 1; size <= cand.size(); ++size) {
    std::vector<Vertex> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
      if (chosen.size() == size) {
        std::set<Vertex> cov;
        for (Vertex v : chosen) cov.insert(nb[v].begin(), nb[v].end());
        return cov.size() >= t;
      }
      for (std::size_t i = start; i < cand.size(); ++i) {
        chosen.push_back(cand[i]);
        const bool ok = rec(i + 1);
        chosen.pop_back();
        if (ok) return true;
      }
      return false;
    };
    if (rec(0)) return size;
  }
  return std::nullopt;
}

std::optional<unsigned> bf_tdom_bitmask(const UndirectedGraph& g, unsigned t, const std::vector<std::uint8_t>& alive) {
  const auto n = g.num_vertices();
  guard(n <= kMaxVertices, "more than 12 vertices");
  const auto live = full_mask(n, alive);
  std::vector<std::uint32_t> nb(n, 0);
  std::uint32_t live_bits = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (live[v]) {
      nb[v] = 1U << v;
      live_bits |= 1U << v;
    }
  }
  for (const auto& [a, b] : g.edges()) {
    if (live[a] && live[b]) {
      nb[a] |= 1U << b;
      nb[b] |= 1U << a;
    }
  }
  std::optional<unsigned> best;
  for (std::uint32_t pick = 1; pick < (1U << n); ++pick) {
    if ((pick & ~live_bits) != 0) continue;
    std::uint32_t cov = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (pick >> v & 1U) cov |= nb[v];
    }
    const auto size = static_cast<unsigned>(std::popcount(pick));
    if (static_cast<unsigned>(std::popcount(cov)) >= t && (!best || size < *best)) best = size;
  }
  return best;
}

// ---------------------------------------------------------------------------
// d-dimensional matching

bool bf_ddim(const TupleList& tuples, unsigned d, unsigned k) {
  guard(tuples.size() <= kMaxSets, "too many tuples");
  std::vector<std::set<std::uint32_t>> used(d);
  std::function<bool(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) -> bool {
    if (left == 0) return true;
    if (i == tuples.size()) return false;
    if (rec(i + 1, left)) return true;
    const auto& t = tuples[i];
    for (unsigned c = 0; c < d; ++c) {
      if (used[c].count(t[c])) return false;
    }
    for (unsigned c = 0; c < d; ++c) used[c].insert(t[c]);
    const bool ok = rec(i + 1, left - 1);
    for (unsigned c = 0; c < d; ++c) used[c].erase(t[c]);
    return ok;
  };
  return rec(0, k);
}

bool bf_ddim_bitmask(const TupleList& tuples, unsigned d, unsigned k) {
  guard(tuples.size() <= kMaxSets, "too many tuples");
  for (std::uint32_t pick = 0; pick < (1U << tuples.size()); ++pick) {
    if (static_cast<unsigned>(std::popcount(pick)) != k) continue;
    bool ok = true;
    for (std::size_t i = 0; i < tuples.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < tuples.size() && ok; ++j) {
        if (!(pick >> i & 1U) || !(pick >> j & 1U)) continue;
        for (unsigned c = 0; c < d; ++c) ok = ok && tuples[i][c] != tuples[j][c];
      }
    }
    if (ok) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// admissible walks

Extensor<Gf2mRing> bf_admissible_walksum(const UndirectedOracle& oracle, std::size_t trial, Vertex u, Vertex v,
                                         unsigned s) {
  const auto& g = oracle.graph();
  const auto n = g.num_vertices();
  guard(n <= kMaxVertices && s <= kMaxK + 2, "walk enumeration too large");
  const auto& p = oracle.trials().at(trial);
  const auto& ring = oracle.ring();
  Extensor<Gf2mRing> sum(ring, oracle.dims());
  if (s == 0 || u >= n || v >= n) return sum;
  std::vector<Vertex> w(s, 0);
  w[0] = u;
  // Odometer over the interior and final positions.
  while (true) {
    bool walk = w[s - 1] == v;
    for (unsigned i = 0; walk && i + 1 < s; ++i) walk = g.has_edge(w[i], w[i + 1]);
    for (unsigned i = 0; walk && i + 2 < s; ++i) {
      walk = !(p.side[w[i]] == 2 && p.side[w[i + 1]] == 1 && w[i + 2] == w[i]);
    }
    if (walk) {
      std::vector<CodeVector<Gf2mRing>> vs;
      auto scalar = ring.one();
      for (unsigned i = 0; i < s; ++i) {
        if (p.side[w[i]] == 1) vs.push_back(oracle.vertex_vector(w[i]));
        if (i + 1 < s) {
          scalar = ring.mul(scalar, oracle.edge_var(p, w[i], w[i + 1]));
          if (p.side[w[i]] == 2 && p.side[w[i + 1]] == 2) vs.push_back(oracle.edge_vector(w[i], w[i + 1]));
        }
      }
      auto x = vs.size() > oracle.dims() ? Extensor<Gf2mRing>(ring, oracle.dims())
                                         : wedge_vectors(ring, oracle.dims(), vs);
      sum.add_scaled(x, scalar);
    }
    unsigned pos = s - 1;
    while (pos >= 1 && w[pos] == n - 1) w[pos--] = 0;
    if (pos == 0) break;
    ++w[pos];
  }
  return sum;
}

// ---------------------------------------------------------------------------
// constrained walks and paths

namespace {

struct Occupancy {
  std::vector<std::uint8_t> in1;
  std::vector<std::uint8_t> in2;
  unsigned mu1;
  unsigned mu2;

  bool ok(const std::vector<Vertex>& path) const {
    unsigned c1 = 0;
    unsigned c2 = 0;
    for (Vertex v : path) {
      c1 += in1[v];
      c2 += in2[v];
    }
    return c1 <= mu1 && c2 <= mu2;
  }
};

Occupancy occupancy(std::uint32_t n, const ConstraintSpec& spec) {
  Occupancy o{std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0), spec.mu1, spec.mu2};
  for (Vertex v : spec.V1) {
    if (v >= n) throw DomainError("V1 vertex out of range");
    o.in1[v] = 1;
  }
  for (Vertex v : spec.V2) {
    if (v >= n) throw DomainError("V2 vertex out of range");
    o.in2[v] = 1;
  }
  return o;
}

/// Calls f on every vertex sequence of length k that follows edges; stops when f returns true.
bool any_walk_sequence(const DirectedGraph& g, unsigned k, const std::function<bool(const std::vector<Vertex>&)>& f) {
  const auto n = g.num_vertices();
  if (n == 0 || k == 0) return false;
  std::vector<Vertex> w(k, 0);
  while (true) {
    bool walk = true;
    for (unsigned i = 0; walk && i + 1 < k; ++i) walk = g.has_edge(w[i], w[i + 1]);
    if (walk && f(w)) return true;
    unsigned pos = k;
    while (pos > 0 && w[pos - 1] == n - 1) w[--pos] = 0;
    if (pos == 0) return false;
    ++w[pos - 1];
  }
}

unsigned distinct(const std::vector<Vertex>& w) {
  std::set<Vertex> s(w.begin(), w.end());
  return static_cast<unsigned>(s.size());
}

}  // namespace

bool bf_constrained_kpath(const DirectedGraph& g, unsigned k, const ConstraintSpec& spec) {
  const auto n = g.num_vertices();
  guard(n <= kMaxVertices && k <= kMaxK, "constrained path enumeration too large");
  const auto occ = occupancy(n, spec);
  const auto adj = g.out_adjacency();
  std::vector<Vertex> path;
  std::vector<std::uint8_t> on(n, 0);
  std::function<bool(Vertex)> dfs = [&](Vertex v) -> bool {
    path.push_back(v);
    on[v] = 1;
    bool found = false;
    if (occ.ok(path)) {
      if (path.size() == k) {
        found = true;
      } else {
        for (Vertex w : adj[v]) {
          if (!on[w] && dfs(w)) {
            found = true;
            break;
          }
        }
      }
    }
    on[v] = 0;
    path.pop_back();
    return found;
  };
  for (Vertex v = 0; v < n; ++v) {
    if (k > 0 && dfs(v)) return true;
  }
  return false;
}

bool bf_constrained_kpath_sequences(const DirectedGraph& g, unsigned k, const ConstraintSpec& spec) {
  guard(g.num_vertices() <= kMaxVertices && k <= kMaxK, "constrained path enumeration too large");
  const auto occ = occupancy(g.num_vertices(), spec);
  return any_walk_sequence(g, k, [&](const std::vector<Vertex>& w) { return distinct(w) == k && occ.ok(w); });
}

bool bf_kwalk_one_repeat(const DirectedGraph& g, unsigned k) {
  const auto n = g.num_vertices();
  guard(n <= kMaxVertices && k <= kMaxK, "walk enumeration too large");
  const auto adj = g.out_adjacency();
  std::vector<unsigned> count(n, 0);
  std::function<bool(Vertex, unsigned, unsigned)> dfs = [&](Vertex v, unsigned len, unsigned repeats) -> bool {
    if (len == k) return true;
    for (Vertex w : adj[v]) {
      const unsigned extra = count[w] > 0 ? 1 : 0;
      if (repeats + extra > 1) continue;
      ++count[w];
      const bool ok = dfs(w, len + 1, repeats + extra);
      --count[w];
      if (ok) return true;
    }
    return false;
  };
  for (Vertex v = 0; v < n; ++v) {
    if (k == 0) break;
    ++count[v];
    const bool ok = dfs(v, 1, 0);
    --count[v];
    if (ok) return true;
  }
  return false;
}

bool bf_kwalk_one_repeat_sequences(const DirectedGraph& g, unsigned k) {
  guard(g.num_vertices() <= kMaxVertices && k <= kMaxK, "walk enumeration too large");
  return any_walk_sequence(g, k, [&](const std::vector<Vertex>& w) { return distinct(w) + 1 >= k; });
}

}  // namespace extensor::reference
