#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "extensor/extensor.hpp"
#include "extensor/graph.hpp"
#include "extensor/truncated_poly.hpp"

namespace extensor {

struct UndirectedAccess;

/// (k1, k2) = (ceil(k/2), floor((sqrt(2) - 1) / 2 * k)).
std::pair<unsigned, unsigned> choose_params(unsigned k);

/// ceil(8 * 1.015^k * ln(1/delta)).
unsigned default_trials(unsigned k, double delta = 0.01);

using UPoly = TruncatedPoly<Gf2mRing>;

/// One random partition V = V1 u V2 with its codes and admissible-walk sums.
///
/// Codes: a V1 vertex carries z times a Vandermonde vector on the first k1 coordinates, a V2
/// vertex carries z. An edge inside V2 carries y_uv times a Vandermonde vector on the last
/// k2 coordinates, any other edge carries y_uv. Walks never step from a V2 vertex to a V1
/// vertex and straight back.
struct PartitionState {
  std::uint64_t seed = 0;
  /// side[v] is 1 or 2.
  std::vector<std::uint8_t> side;
  std::vector<Gf2mElement> vertex_var;
  /// Q[u * n + v]: admissible walks u -> v, z-degree = number of vertices.
  std::vector<UPoly> Q;
  std::vector<UPoly> S;
  /// Sbold[u] = sum_v Q[u][v] y_v.
  std::vector<UPoly> Sbold;
  UPoly Z;

  friend bool operator==(const PartitionState&, const PartitionState&) = default;
};

struct UndirectedOptions {
  unsigned k = 4;
  /// 0 selects `default_trials(k)`.
  unsigned trials = 0;
  std::uint64_t seed = 0;
  unsigned field_degree = 16;
  bool parallel = true;
};

/// Randomized sensitivity oracle for undirected k-path over random vertex partitions.
class UndirectedOracle {
 public:
  UndirectedOracle() = default;

  static UndirectedOracle preprocess(const UndirectedGraph& g, const UndirectedOptions& opts);
  /// Fixed partition V1 = {v : side[v] == 1}, V2 = the rest, with k1 = k/2 and k2 = 0.
  /// Requires even k and no edge inside a side.
  static UndirectedOracle preprocess_bipartite(const UndirectedGraph& g, const std::vector<std::uint8_t>& side,
                                               const UndirectedOptions& opts);
  /// Explicit partitions, one trial each; (k1, k2) default to `choose_params(k)`.
  static UndirectedOracle with_partitions(const UndirectedGraph& g, const UndirectedOptions& opts,
                                          const std::vector<std::vector<std::uint8_t>>& sides);

  bool static_answer() const;
  bool query(const UpdateBatch& batch, Validation validation = Validation::kStrict) const;
  /// [z^k e_{[k1+k2]}] of the updated sum, per trial.
  std::vector<Gf2mElement> trial_witnesses(const UpdateBatch& batch, Validation validation = Validation::kStrict) const;
  /// Same randomness and partitions, preprocessed on the updated graph.
  UndirectedOracle recompute(const UpdateBatch& batch) const;

  unsigned k() const { return k_; }
  unsigned k1() const { return k1_; }
  unsigned k2() const { return k2_; }
  unsigned dims() const { return k1_ + k2_; }
  std::uint64_t seed() const { return seed_; }
  bool bipartite() const { return bipartite_; }
  /// Too many edges for a path-free graph; preprocessing was skipped.
  bool always_yes() const { return always_yes_; }
  const UndirectedGraph& graph() const { return graph_; }
  const Gf2mRing& ring() const { return ring_; }
  const std::vector<PartitionState>& trials() const { return trials_; }

  /// Vertex and edge codes of one trial.
  UPoly apply_vertex(const PartitionState& p, UPoly x, Vertex v) const;
  UPoly apply_edge(const PartitionState& p, UPoly x, Vertex u, Vertex v) const;
  Gf2mElement edge_var(const PartitionState& p, Vertex u, Vertex v) const;
  CodeVector<Gf2mRing> vertex_vector(Vertex v) const;
  CodeVector<Gf2mRing> edge_vector(Vertex u, Vertex v) const;

  friend bool operator==(const UndirectedOracle& a, const UndirectedOracle& b) {
    return a.ring_ == b.ring_ && a.graph_ == b.graph_ && a.k_ == b.k_ && a.k1_ == b.k1_ && a.k2_ == b.k2_ &&
           a.seed_ == b.seed_ && a.bipartite_ == b.bipartite_ && a.always_yes_ == b.always_yes_ &&
           a.trials_ == b.trials_;
  }

 private:
  friend struct UndirectedAccess;

  static UndirectedOracle make(const UndirectedGraph& g, const UndirectedOptions& opts, unsigned k1, unsigned k2,
                               unsigned trials, std::vector<std::vector<std::uint8_t>> sides, bool bipartite = false);
  void build(bool parallel);
  void build_trial(PartitionState& p) const;
  Gf2mElement trial_witness(const PartitionState& p, const UpdateBatch& nb) const;
  bool fallback_answer(const UpdateBatch& nb) const;

  Gf2mRing ring_;
  UndirectedGraph graph_;
  unsigned k_ = 0;
  unsigned k1_ = 0;
  unsigned k2_ = 0;
  std::uint64_t seed_ = 0;
  bool bipartite_ = false;
  bool always_yes_ = false;
  bool parallel_ = true;
  unsigned num_trials_ = 0;
  std::vector<std::vector<std::uint8_t>> fixed_sides_;
  std::vector<PartitionState> trials_;
};

}  // namespace extensor
