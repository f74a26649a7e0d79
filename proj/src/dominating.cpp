#include "extensor/dominating.hpp"

#include <string>

#include "extensor/error.hpp"

namespace extensor {

template <class Ring>
DominatingSet<Ring>::DominatingSet(const UndirectedGraph& g, unsigned t, std::uint64_t seed, unsigned field_degree)
    : graph_(g), alive_(g.num_vertices(), 1), handle_(g.num_vertices(), 0),
      cover_(g.num_vertices(), t, seed, field_degree) {
  for (Vertex v = 0; v < graph_.num_vertices(); ++v) handle_[v] = cover_.insert(closed_neighbourhood(v), v);
}

template <class Ring>
std::vector<Element> DominatingSet<Ring>::closed_neighbourhood(Vertex v) const {
  check_alive(v);
  std::vector<Element> out{v + 1};
  for (const auto& [a, b] : graph_.edges()) {
    if (a == v) out.push_back(b + 1);
    if (b == v) out.push_back(a + 1);
  }
  return out;
}

template <class Ring>
void DominatingSet<Ring>::check_alive(Vertex v) const {
  if (!alive(v)) throw DomainError("vertex " + std::to_string(v) + " is not present");
}

template <class Ring>
void DominatingSet<Ring>::refresh(Vertex v) {
  cover_.remove(handle_[v]);
  handle_[v] = cover_.insert(closed_neighbourhood(v), v);
}

template <class Ring>
void DominatingSet<Ring>::insert_edge(Vertex u, Vertex v) {
  check_alive(u);
  check_alive(v);
  if (!graph_.add_edge(u, v)) throw DomainError("edge already present");
  refresh(u);
  refresh(v);
}

template <class Ring>
void DominatingSet<Ring>::remove_edge(Vertex u, Vertex v) {
  check_alive(u);
  check_alive(v);
  if (!graph_.remove_edge(u, v)) throw DomainError("edge not present");
  refresh(u);
  refresh(v);
}

template <class Ring>
Vertex DominatingSet<Ring>::add_vertex() {
  const Vertex v = graph_.add_vertex();
  cover_.extend_universe(graph_.num_vertices());
  alive_.push_back(1);
  handle_.push_back(cover_.insert({v + 1}, v));
  return v;
}

template <class Ring>
void DominatingSet<Ring>::remove_vertex(Vertex v) {
  check_alive(v);
  std::vector<Vertex> nbrs;
  for (const auto& [a, b] : graph_.edges()) {
    if (a == v) nbrs.push_back(b);
    if (b == v) nbrs.push_back(a);
  }
  for (Vertex w : nbrs) graph_.remove_edge(v, w);
  cover_.remove(handle_[v]);
  alive_[v] = 0;
  for (Vertex w : nbrs) refresh(w);
}

template class DominatingSet<Gf2mRing>;
template class DominatingSet<IntegerRing>;

}  // namespace extensor
