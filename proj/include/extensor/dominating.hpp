#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "extensor/dynamic_cover.hpp"
#include "extensor/graph.hpp"

namespace extensor {

/// Partial dominating set: the least number of vertices whose closed neighbourhoods cover at
/// least t vertices, maintained as a partial cover over the closed neighbourhoods.
template <class Ring>
class DominatingSet {
 public:
  DominatingSet(const UndirectedGraph& g, unsigned t, std::uint64_t seed = 0, unsigned field_degree = 16);

  void insert_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  /// Adds an isolated vertex and returns its id.
  Vertex add_vertex();
  /// Removes v and its edges. The id is not reused.
  void remove_vertex(Vertex v);

  std::optional<unsigned> query() const { return cover_.query(); }

  const UndirectedGraph& graph() const { return graph_; }
  bool alive(Vertex v) const { return v < alive_.size() && alive_[v]; }
  const std::vector<std::uint8_t>& alive_mask() const { return alive_; }
  std::vector<Element> closed_neighbourhood(Vertex v) const;
  const PartialCover<Ring>& cover() const { return cover_; }

 private:
  void check_alive(Vertex v) const;
  void refresh(Vertex v);

  UndirectedGraph graph_;
  std::vector<std::uint8_t> alive_;
  std::vector<Handle> handle_;
  PartialCover<Ring> cover_;
};

}  // namespace extensor
