#include "extensor/text_io.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "extensor/error.hpp"

namespace extensor {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool skip(const std::string& line) { return line.empty() || line[0] == '#'; }

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_number(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) fail(line, "bad number '" + tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    fail(line, "number out of range '" + tok + "'");
  }
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

Vertex vertex_id(const std::string& tok, std::uint32_t n, std::size_t line) {
  const auto v = parse_number(tok, line);
  if (v == 0 || v > n) fail(line, "vertex id " + tok + " outside [1, " + std::to_string(n) + "]");
  return static_cast<Vertex>(v - 1);
}

std::vector<Vertex> id_list(const std::string& rest, std::uint32_t n, std::size_t line) {
  std::vector<Vertex> out;
  for (const auto& t : tokens(rest)) out.push_back(vertex_id(t, n, line));
  return out;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

}  // namespace

DirectedGraph GraphInput::directed_graph() const { return DirectedGraph(n, edges); }

UndirectedGraph GraphInput::undirected_graph() const { return UndirectedGraph(n, edges); }

GraphInput parse_graph(std::istream& in) {
  GraphInput g;
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  std::size_t m = 0;
  std::set<Edge> seen;
  ConstraintSpec spec;
  bool any_constraint = false;
  bool have_mu = false;
  while (std::getline(in, raw)) {
    ++line;
    const auto s = trim(raw);
    if (skip(s)) continue;
    if (!have_header) {
      const auto t = tokens(s);
      if (t.size() != 3 || (t[2] != "directed" && t[2] != "undirected")) {
        fail(line, "expected header 'n m directed|undirected'");
      }
      const auto n = parse_number(t[0], line);
      if (n > 0xffffffffULL) fail(line, "too many vertices");
      g.n = static_cast<std::uint32_t>(n);
      m = parse_number(t[1], line);
      g.directed = t[2] == "directed";
      have_header = true;
      continue;
    }
    if (g.edges.size() < m) {
      const auto t = tokens(s);
      if (t.size() != 2) fail(line, "expected edge 'u v'");
      const auto u = vertex_id(t[0], g.n, line);
      const auto v = vertex_id(t[1], g.n, line);
      if (!g.directed && u == v) fail(line, "self-loop in undirected graph");
      const Edge e = g.directed ? Edge{u, v} : UndirectedGraph::canonical(u, v);
      if (!seen.insert(e).second) fail(line, "duplicate edge");
      g.edges.push_back({u, v});
      continue;
    }
    if (s.rfind("V1:", 0) == 0) {
      spec.V1 = id_list(s.substr(3), g.n, line);
      any_constraint = true;
    } else if (s.rfind("V2:", 0) == 0) {
      spec.V2 = id_list(s.substr(3), g.n, line);
      any_constraint = true;
    } else {
      const auto t = tokens(s);
      if (t.size() != 2 || have_mu) fail(line, "unexpected content after the edge list");
      spec.mu1 = static_cast<unsigned>(parse_number(t[0], line));
      spec.mu2 = static_cast<unsigned>(parse_number(t[1], line));
      have_mu = true;
      any_constraint = true;
    }
  }
  if (!have_header) throw ParseError("missing graph header");
  if (g.edges.size() != m) {
    throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(g.edges.size()));
  }
  if (any_constraint) g.constraints = spec;
  return g;
}

GraphInput parse_graph_file(const std::string& path) {
  auto in = open(path);
  return parse_graph(in);
}

UpdateBatch parse_updates(std::istream& in, std::uint32_t n) {
  UpdateBatch b;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto s = trim(raw);
    if (skip(s)) continue;
    const auto t = tokens(s);
    if ((t[0] == "+" || t[0] == "-") && t.size() == 3) {
      const Edge e{vertex_id(t[1], n, line), vertex_id(t[2], n, line)};
      (t[0] == "+" ? b.inserts : b.deletes).push_back(e);
    } else if (t[0] == "x" && t.size() == 2) {
      b.vertex_failures.push_back(vertex_id(t[1], n, line));
    } else {
      fail(line, "expected '+ u v', '- u v' or 'x u'");
    }
  }
  return b;
}

UpdateBatch parse_updates_file(const std::string& path, std::uint32_t n) {
  auto in = open(path);
  return parse_updates(in, n);
}

std::vector<std::uint8_t> parse_sides(std::istream& in, std::uint32_t n) {
  std::vector<std::uint8_t> side(n, 2);
  std::string raw;
  std::size_t line = 0;
  bool found = false;
  while (std::getline(in, raw)) {
    ++line;
    const auto s = trim(raw);
    if (skip(s)) continue;
    if (s.rfind("V1:", 0) != 0 || found) fail(line, "expected a single line 'V1: ids...'");
    for (Vertex v : id_list(s.substr(3), n, line)) side[v] = 1;
    found = true;
  }
  if (!found) throw ParseError("missing 'V1:' line");
  return side;
}

std::vector<std::uint8_t> parse_sides_file(const std::string& path, std::uint32_t n) {
  auto in = open(path);
  return parse_sides(in, n);
}

Session parse_session(std::istream& in) {
  Session s;
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++line;
    const auto str = trim(raw);
    if (skip(str)) continue;
    if (!have_header) {
      const auto t = tokens(str);
      if (t.size() != 2) fail(line, "expected header with two numbers");
      s.first = parse_number(t[0], line);
      s.second = parse_number(t[1], line);
      have_header = true;
      continue;
    }
    SessionLine cmd;
    cmd.line = line;
    cmd.op = str[0];
    if (cmd.op != '+' && cmd.op != '-' && cmd.op != '?' && cmd.op != 'x' && cmd.op != 'v') {
      fail(line, "unknown command '" + std::string(1, cmd.op) + "'");
    }
    for (const auto& t : tokens(str.substr(1))) cmd.args.push_back(parse_number(t, line));
    if ((cmd.op == '?' || cmd.op == 'v') && !cmd.args.empty()) fail(line, "command takes no arguments");
    s.lines.push_back(std::move(cmd));
  }
  if (!have_header) throw ParseError("missing session header");
  return s;
}

}  // namespace extensor
