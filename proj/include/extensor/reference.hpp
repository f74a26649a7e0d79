#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "extensor/constrained.hpp"
#include "extensor/dynamic_cover.hpp"
#include "extensor/graph.hpp"
#include "extensor/undirected_oracle.hpp"

namespace extensor::reference {

/// Size guards; exceeding one throws CapabilityError.
inline constexpr std::uint32_t kMaxPathVertices = 14;
inline constexpr std::uint32_t kMaxVertices = 12;
inline constexpr std::size_t kMaxSets = 12;
inline constexpr unsigned kMaxK = 6;

using SetList = std::vector<std::vector<Element>>;
using TupleList = std::vector<std::vector<std::uint32_t>>;

/// Ordered k-vertex simple paths; vertices with alive[v] == 0 are skipped. An empty mask keeps all.
bool bf_kpath(const DirectedGraph& g, unsigned k, const std::vector<std::uint8_t>& alive = {});
std::uint64_t bf_kpath_count(const DirectedGraph& g, unsigned k, const std::vector<std::uint8_t>& alive = {});
/// Subset dynamic program over (visited set, last vertex).
std::uint64_t bf_kpath_count_dp(const DirectedGraph& g, unsigned k, const std::vector<std::uint8_t>& alive = {});
bool bf_kpath(const UndirectedGraph& g, unsigned k);

/// Pairwise disjoint sets whose union has exactly k elements.
bool bf_exact_cover(const SetList& sets, unsigned k);
bool bf_exact_cover_bitmask(const SetList& sets, unsigned k);
/// Fewest sets whose union has at least k elements.
std::optional<unsigned> bf_partial_cover_min(const SetList& sets, unsigned k);
std::optional<unsigned> bf_partial_cover_min_bitmask(const SetList& sets, unsigned k);
/// k pairwise disjoint sets of size m.
bool bf_packing(const SetList& sets, unsigned m, unsigned k);
/// Number of k-element sub-collections (by position) of pairwise disjoint m-sets.
std::uint64_t bf_packing_count(const SetList& sets, unsigned m, unsigned k);
std::uint64_t bf_packing_count_bitmask(const SetList& sets, unsigned m, unsigned k);

/// Fewest vertices whose closed neighbourhoods cover at least t live vertices.
std::optional<unsigned> bf_tdom(const UndirectedGraph& g, unsigned t, const std::vector<std::uint8_t>& alive = {});
std::optional<unsigned> bf_tdom_bitmask(const UndirectedGraph& g, unsigned t,
                                        const std::vector<std::uint8_t>& alive = {});

/// k tuples pairwise disjoint in every coordinate.
bool bf_ddim(const TupleList& tuples, unsigned d, unsigned k);
bool bf_ddim_bitmask(const TupleList& tuples, unsigned d, unsigned k);

/// Sum of walk extensors over admissible walks u -> v on s vertices for one trial of `oracle`,
/// each product formed from the codes by a general wedge.
Extensor<Gf2mRing> bf_admissible_walksum(const UndirectedOracle& oracle, std::size_t trial, Vertex u, Vertex v,
                                         unsigned s);

/// k-path with at most mu1 vertices of V1 and mu2 of V2.
bool bf_constrained_kpath(const DirectedGraph& g, unsigned k, const ConstraintSpec& spec);
bool bf_constrained_kpath_sequences(const DirectedGraph& g, unsigned k, const ConstraintSpec& spec);

/// Walk on k vertices with at least k - 1 distinct vertices.
bool bf_kwalk_one_repeat(const DirectedGraph& g, unsigned k);
bool bf_kwalk_one_repeat_sequences(const DirectedGraph& g, unsigned k);

}  // namespace extensor::reference
