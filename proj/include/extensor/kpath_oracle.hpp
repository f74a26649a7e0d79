#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "extensor/codes.hpp"
#include "extensor/extensor.hpp"
#include "extensor/gf2m.hpp"
#include "extensor/graph.hpp"
#include "extensor/truncated_poly.hpp"

namespace extensor {

/// Randomized: codes and edge variables over GF(2^d), one-sided error.
/// Deterministic: lifted Vandermonde codes over the integers, unit edge variables.
enum class Mode : std::uint8_t { kRandomized = 1, kDeterministic = 2 };

/// How updates to the user-facing graph map onto the graph the walk sums run over.
enum class Embedding : std::uint8_t {
  /// The internal graph is the input graph.
  kIdentity = 0,
  /// Vertex v becomes v_in = 2v and v_out = 2v + 1, joined by the edge (v_in, v_out).
  kSplit = 1,
  /// Two copies of the graph; edge (u, v) maps to (u1, v1), (u1, v2) and (u2, v1).
  kTwoCopy = 2,
};

/// Which coefficient of the updated walk sum certifies a solution.
enum class Target : std::uint8_t {
  /// The coefficient of e_{[D]}.
  kTop = 0,
  /// Any coefficient on a mask A u (A + D/2); used with lifted codes of varying degree.
  kDiagonal = 1,
};

struct KPathOptions {
  /// Number of path vertices.
  unsigned k = 3;
  Mode mode = Mode::kDeterministic;
  std::uint64_t seed = 0;
  bool vertex_failures = false;
  unsigned field_degree = Gf2mField::kDefaultDegree;
  /// Run walk propagation with OpenMP across source vertices.
  bool parallel = true;
};

template <class Ring>
struct QueryResult {
  bool answer = false;
  typename Ring::value_type witness{};
};

/// Frozen preprocessing output of the directed k-path sensitivity oracle.
///
/// Q[i][j] holds the sum of walk extensors over walks i -> j on 1..max_len internal vertices.
/// When `graded`, each entry is split by the number of walk vertices (grade g = vertex count),
/// otherwise a single grade 0 carries everything.
template <class Ring>
struct KPathState {
  using value_type = typename Ring::value_type;

  Ring ring{};
  Mode mode = Mode::kDeterministic;
  Embedding embedding = Embedding::kIdentity;
  Target target = Target::kTop;
  unsigned k = 0;
  unsigned dims = 0;
  unsigned max_len = 0;
  bool graded = false;
  /// Grade inspected by the final coefficient test (graded states only).
  unsigned target_grade = 0;
  std::uint64_t seed = 0;
  /// Edge variables are 1 instead of PRF samples.
  bool unit_weights = true;

  DirectedGraph graph;
  DirectedGraph internal;
  std::vector<FactoredCode<Ring>> codes;
  /// Walks may only start at these internal vertices.
  std::vector<std::uint8_t> start_eligible;

  std::vector<value_type> Q;
  std::vector<value_type> S;
  std::vector<value_type> F;
  std::vector<value_type> Z;

  std::uint32_t n() const { return graph.num_vertices(); }
  std::uint32_t internal_n() const { return internal.num_vertices(); }
  std::size_t ext_size() const { return std::size_t{1} << dims; }
  unsigned grades() const { return graded ? max_len + 1 : 1; }
  /// Coefficients per Q entry.
  std::size_t stride() const { return grades() * ext_size(); }

  const value_type* q(std::uint32_t i, std::uint32_t j) const {
    return Q.data() + (static_cast<std::size_t>(i) * internal_n() + j) * stride();
  }
  value_type* q(std::uint32_t i, std::uint32_t j) {
    return Q.data() + (static_cast<std::size_t>(i) * internal_n() + j) * stride();
  }
  const value_type* s(std::uint32_t i) const { return S.data() + i * stride(); }
  const value_type* f(std::uint32_t j) const { return F.data() + j * stride(); }

  /// Edge variable of an internal edge.
  value_type edge_weight(Vertex u, Vertex v) const;

  /// Internal edges standing for a user-facing edge.
  std::vector<Edge> internal_edges(Vertex u, Vertex v) const;

  friend bool operator==(const KPathState& a, const KPathState& b) {
    return a.ring == b.ring && a.mode == b.mode && a.embedding == b.embedding && a.target == b.target &&
           a.k == b.k && a.dims == b.dims && a.max_len == b.max_len && a.graded == b.graded &&
           a.target_grade == b.target_grade && a.seed == b.seed && a.unit_weights == b.unit_weights &&
           a.graph == b.graph && a.internal == b.internal && a.codes == b.codes &&
           a.start_eligible == b.start_eligible && a.Q == b.Q && a.S == b.S && a.F == b.F && a.Z == b.Z;
  }
};

using RandomizedState = KPathState<Gf2mRing>;
using DeterministicState = KPathState<IntegerRing>;
using AnyKPathState = std::variant<RandomizedState, DeterministicState>;

/// Field used by randomized states: GF(2^d) with d checked against the 100k and code-count bounds.
std::shared_ptr<const Gf2mField> make_field(unsigned degree, unsigned k, std::uint64_t codes);

/// Random code vector for (seed, vertex) over the field.
CodeVector<Gf2mRing> random_code(const Gf2mRing& ring, std::uint64_t seed, std::uint64_t vertex, unsigned dims);

RandomizedState preprocess_randomized(const DirectedGraph& g, const KPathOptions& opts);
DeterministicState preprocess_deterministic(const DirectedGraph& g, const KPathOptions& opts);
/// Dispatches on `opts.mode`.
AnyKPathState preprocess(const DirectedGraph& g, const KPathOptions& opts);

/// Fills Q, S, F and Z from the state's internal graph, codes and start set.
template <class Ring>
void build_walk_sums(KPathState<Ring>& state, bool parallel);

/// Same construction and randomness as `state`, preprocessed on `internal` from scratch.
template <class Ring>
KPathState<Ring> recompute_internal(const KPathState<Ring>& state, const DirectedGraph& internal, bool parallel = true);

/// From-scratch preprocessing of the updated graph with identical codes and edge variables.
template <class Ring>
KPathState<Ring> recompute(const KPathState<Ring>& state, const UpdateBatch& batch, bool parallel = true);

/// The certifying coefficient of Z.
template <class Ring>
typename Ring::value_type static_witness(const KPathState<Ring>& state);

/// Answer for the initial graph.
template <class Ring>
bool static_answer(const KPathState<Ring>& state) {
  return !Ring::is_zero(static_witness(state));
}

/// An internal edge change with its signed variable: +y for insertion, -y for deletion.
template <class Ring>
struct WeightedEdge {
  Vertex from;
  Vertex to;
  typename Ring::value_type weight;
};

/// Translates a user-facing batch to signed internal edge changes.
template <class Ring>
std::vector<WeightedEdge<Ring>> internal_delta(const KPathState<Ring>& state, const UpdateBatch& batch);

/// Evaluates the updated walk sum against the initial preprocessing. The state is not modified.
template <class Ring>
QueryResult<Ring> query(const KPathState<Ring>& state, const UpdateBatch& batch,
                        Validation validation = Validation::kStrict);

/// Updated walk sums between touched internal vertices.
template <class Ring>
struct UpdatedPairs {
  /// Internal ids of the touched vertices; row/column order of `entries`.
  std::vector<Vertex> vertices;
  /// Row-major |vertices| x |vertices| matrix; graded states are summed over grades.
  std::vector<Extensor<Ring>> entries;

  const Extensor<Ring>& at(std::size_t row, std::size_t col) const { return entries[row * vertices.size() + col]; }
};

template <class Ring>
UpdatedPairs<Ring> query_updated_pairs(const KPathState<Ring>& state, const UpdateBatch& batch,
                                       Validation validation = Validation::kStrict);

/// Witness-free answer for either state kind.
bool query_answer(const AnyKPathState& state, const UpdateBatch& batch, Validation validation = Validation::kStrict);
bool static_answer(const AnyKPathState& state);

/// r independent randomized states whose answers are OR-ed.
class AmplifiedOracle {
 public:
  AmplifiedOracle(const DirectedGraph& g, KPathOptions opts, unsigned repetitions);
  bool query(const UpdateBatch& batch) const;
  const std::vector<RandomizedState>& states() const { return states_; }

 private:
  std::vector<RandomizedState> states_;
};

extern template struct KPathState<Gf2mRing>;
extern template struct KPathState<IntegerRing>;

}  // namespace extensor
