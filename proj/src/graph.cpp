#include "extensor/graph.hpp"

#include <algorithm>
#include <string>

#include "extensor/error.hpp"

namespace extensor {

DirectedGraph::DirectedGraph(std::uint32_t n, const std::vector<Edge>& edges) : n_(n) {
  for (const auto& [u, v] : edges) {
    if (!add_edge(u, v)) throw DomainError("duplicate edge");
  }
}

void DirectedGraph::check(Vertex v) const {
  if (v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
}

bool DirectedGraph::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  return edges_.insert({u, v}).second;
}

bool DirectedGraph::remove_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  return edges_.erase({u, v}) != 0;
}

void DirectedGraph::isolate(Vertex v) {
  check(v);
  std::erase_if(edges_, [v](const Edge& e) { return e.first == v || e.second == v; });
}

std::vector<std::vector<Vertex>> DirectedGraph::out_adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const auto& [u, v] : edges_) adj[u].push_back(v);
  return adj;
}

UndirectedGraph::UndirectedGraph(std::uint32_t n, const std::vector<Edge>& edges) : n_(n) {
  for (const auto& [u, v] : edges) {
    if (!add_edge(u, v)) throw DomainError("duplicate edge");
  }
}

void UndirectedGraph::check(Vertex v) const {
  if (v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
}

bool UndirectedGraph::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw DomainError("self-loops are not allowed in undirected graphs");
  return edges_.insert(canonical(u, v)).second;
}

bool UndirectedGraph::remove_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  return edges_.erase(canonical(u, v)) != 0;
}

std::vector<std::vector<Vertex>> UndirectedGraph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const auto& [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

DirectedGraph UndirectedGraph::bidirected() const {
  DirectedGraph g(n_);
  for (const auto& [u, v] : edges_) {
    g.add_edge(u, v);
    g.add_edge(v, u);
  }
  return g;
}

namespace {

template <class Graph>
UpdateBatch normalize_edges(const Graph& g, std::vector<Edge> inserts, std::vector<Edge> deletes,
                            Validation mode) {
  const auto n = g.num_vertices();
  auto check_ids = [n](const Edge& e) {
    if (e.first >= n || e.second >= n) {
      throw DomainError("update references vertex " + std::to_string(std::max(e.first, e.second)) +
                        " outside a graph of " + std::to_string(n) + " vertices");
    }
  };
  for (const auto& e : inserts) check_ids(e);
  for (const auto& e : deletes) check_ids(e);
  std::sort(inserts.begin(), inserts.end());
  inserts.erase(std::unique(inserts.begin(), inserts.end()), inserts.end());
  std::sort(deletes.begin(), deletes.end());
  deletes.erase(std::unique(deletes.begin(), deletes.end()), deletes.end());

  UpdateBatch out;
  std::set_difference(inserts.begin(), inserts.end(), deletes.begin(), deletes.end(),
                      std::back_inserter(out.inserts));
  std::set_difference(deletes.begin(), deletes.end(), inserts.begin(), inserts.end(),
                      std::back_inserter(out.deletes));
  auto keep = [&](std::vector<Edge>& list, bool want_present, const char* what) {
    std::erase_if(list, [&](const Edge& e) {
      if (g.has_edge(e.first, e.second) == want_present) return false;
      if (mode == Validation::kStrict) {
        throw DomainError(std::string(what) + " (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
      }
      return true;
    });
  };
  keep(out.inserts, false, "inserted edge already present");
  keep(out.deletes, true, "deleted edge not present");
  return out;
}

}  // namespace

UpdateBatch UpdateBatch::normalized(const DirectedGraph& g, Validation mode) const {
  UpdateBatch out = normalize_edges(g, inserts, deletes, mode);
  out.vertex_failures = vertex_failures;
  for (Vertex v : out.vertex_failures) {
    if (v >= g.num_vertices()) throw DomainError("failed vertex " + std::to_string(v) + " out of range");
  }
  std::sort(out.vertex_failures.begin(), out.vertex_failures.end());
  out.vertex_failures.erase(std::unique(out.vertex_failures.begin(), out.vertex_failures.end()),
                            out.vertex_failures.end());
  return out;
}

UpdateBatch UpdateBatch::normalized(const UndirectedGraph& g, Validation mode) const {
  if (!vertex_failures.empty()) throw CapabilityError("vertex failures are not supported for undirected graphs");
  auto canon = [](std::vector<Edge> list) {
    for (auto& e : list) {
      if (e.first == e.second) throw DomainError("self-loops are not allowed in undirected graphs");
      e = UndirectedGraph::canonical(e.first, e.second);
    }
    return list;
  };
  return normalize_edges(g, canon(inserts), canon(deletes), mode);
}

DirectedGraph UpdateBatch::apply(const DirectedGraph& g) const {
  DirectedGraph out = g;
  for (const auto& [u, v] : deletes) out.remove_edge(u, v);
  for (const auto& [u, v] : inserts) out.add_edge(u, v);
  for (Vertex v : vertex_failures) out.isolate(v);
  return out;
}

UndirectedGraph UpdateBatch::apply(const UndirectedGraph& g) const {
  UndirectedGraph out = g;
  for (const auto& [u, v] : deletes) out.remove_edge(u, v);
  for (const auto& [u, v] : inserts) out.add_edge(u, v);
  return out;
}

}  // namespace extensor
