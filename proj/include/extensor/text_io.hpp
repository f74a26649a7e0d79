#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "extensor/constrained.hpp"
#include "extensor/graph.hpp"

namespace extensor {

/// Graph file: header "n m directed|undirected", then m lines "u v" with 1-based ids. Optional
/// trailing constraint lines "V1: ids...", "V2: ids..." and "mu1 mu2". Blank lines and lines
/// starting with '#' are ignored. Parsed ids are 0-based.
struct GraphInput {
  std::uint32_t n = 0;
  bool directed = true;
  std::vector<Edge> edges;
  std::optional<ConstraintSpec> constraints;

  DirectedGraph directed_graph() const;
  UndirectedGraph undirected_graph() const;
};

GraphInput parse_graph(std::istream& in);
GraphInput parse_graph_file(const std::string& path);

/// Update script: "+ u v" inserts, "- u v" deletes, "x u" fails a vertex; ids 1-based, at most n.
UpdateBatch parse_updates(std::istream& in, std::uint32_t n);
UpdateBatch parse_updates_file(const std::string& path, std::uint32_t n);

/// Bipartition file: a line "V1: ids..."; every other vertex is on side 2. Returns side[v] in {1, 2}.
std::vector<std::uint8_t> parse_sides(std::istream& in, std::uint32_t n);
std::vector<std::uint8_t> parse_sides_file(const std::string& path, std::uint32_t n);

/// One session command: op is '+', '-', '?', 'x' or 'v'; args are the numbers after it.
struct SessionLine {
  char op = '?';
  std::vector<std::uint64_t> args;
  std::size_t line = 0;
};

/// Session script: a header line of two numbers ("N k" for set systems, "n t" for dominating
/// set sessions) followed by commands.
struct Session {
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  std::vector<SessionLine> lines;
};

Session parse_session(std::istream& in);

}  // namespace extensor
