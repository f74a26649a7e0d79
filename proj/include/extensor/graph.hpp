#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace extensor {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple directed graph on vertices 0..n-1. Self-loops are allowed, parallel edges are not.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(std::uint32_t n) : n_(n) {}
  DirectedGraph(std::uint32_t n, const std::vector<Edge>& edges);

  std::uint32_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::set<Edge>& edges() const { return edges_; }
  bool has_edge(Vertex u, Vertex v) const { return edges_.count({u, v}) != 0; }

  /// Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  /// Returns false if the edge was absent.
  bool remove_edge(Vertex u, Vertex v);
  /// Deletes all edges incident to v; the vertex id stays valid.
  void isolate(Vertex v);

  /// Out-neighbour lists.
  std::vector<std::vector<Vertex>> out_adjacency() const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  void check(Vertex v) const;

  std::uint32_t n_ = 0;
  std::set<Edge> edges_;
};

/// Simple undirected graph; edges are stored as (min, max). Self-loops are rejected.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::uint32_t n) : n_(n) {}
  UndirectedGraph(std::uint32_t n, const std::vector<Edge>& edges);

  static Edge canonical(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

  std::uint32_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::set<Edge>& edges() const { return edges_; }
  bool has_edge(Vertex u, Vertex v) const { return edges_.count(canonical(u, v)) != 0; }
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  /// Appends a fresh isolated vertex and returns its id.
  Vertex add_vertex() { return n_++; }

  std::vector<std::vector<Vertex>> adjacency() const;
  /// The graph with each edge in both directions.
  DirectedGraph bidirected() const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  void check(Vertex v) const;

  std::uint32_t n_ = 0;
  std::set<Edge> edges_;
};

/// How an update batch treats operations that do not change the graph.
enum class Validation {
  /// Inserting a present edge or deleting an absent one is an error.
  kStrict,
  /// Such operations are dropped.
  kPermissive,
};

/// Edge insertions, edge deletions and vertex failures applied together to the initial input.
struct UpdateBatch {
  std::vector<Edge> inserts;
  std::vector<Edge> deletes;
  std::vector<Vertex> vertex_failures;

  std::size_t size() const { return inserts.size() + deletes.size() + vertex_failures.size(); }
  bool empty() const { return size() == 0; }

  /// Removes duplicates, cancels an insert/delete pair of the same edge, and validates ids
  /// and edge presence against `g`.
  UpdateBatch normalized(const DirectedGraph& g, Validation mode = Validation::kStrict) const;
  /// Undirected form: edges are canonicalised first; vertex failures are rejected.
  UpdateBatch normalized(const UndirectedGraph& g, Validation mode = Validation::kStrict) const;

  /// Applies a normalized batch. Failed vertices lose all incident edges.
  DirectedGraph apply(const DirectedGraph& g) const;
  UndirectedGraph apply(const UndirectedGraph& g) const;
};

}  // namespace extensor
