// xtn: command-line front end for the extensor oracles and dynamic set structures.
//
// Exit codes: 0 success, 1 other error, 2 malformed input, 3 unsupported parameters,
// 4 state format version mismatch.

#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "extensor/approx_count.hpp"
#include "extensor/constrained.hpp"
#include "extensor/dominating.hpp"
#include "extensor/dynamic_cover.hpp"
#include "extensor/error.hpp"
#include "extensor/kpath_oracle.hpp"
#include "extensor/matching.hpp"
#include "extensor/reference.hpp"
#include "extensor/serialize.hpp"
#include "extensor/text_io.hpp"
#include "extensor/undirected_oracle.hpp"

using namespace extensor;

namespace {

const char* yes_no(bool b) { return b ? "YES" : "NO"; }

const char* match(bool b) { return b ? "MATCH" : "MISMATCH"; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

UpdateBatch load_updates(const std::string& path, std::uint32_t n) {
  if (path.empty()) return {};
  return parse_updates_file(path, n);
}

std::vector<std::uint8_t> alive_after(std::uint32_t n, const UpdateBatch& b) {
  std::vector<std::uint8_t> alive(n, 1);
  for (Vertex v : b.vertex_failures) alive[v] = 0;
  return alive;
}

// ---------------------------------------------------------------------------
// kpath

struct KPathArgs {
  std::string graph;
  std::string out;
  std::string state;
  std::vector<std::string> updates;
  unsigned k = 3;
  std::string mode = "det";
  std::uint64_t seed = 1;
  unsigned field_degree = Gf2mField::kDefaultDegree;
  bool vertex_failures = false;
  bool brute_force = false;
  bool parallel_queries = false;
  bool permissive = false;
  double epsilon = 0.5;
};

int kpath_preprocess(const KPathArgs& a) {
  const auto in = parse_graph_file(a.graph);
  if (!in.directed) throw ParseError("kpath expects a directed graph");
  KPathOptions opts;
  opts.k = a.k;
  opts.mode = a.mode == "rand" ? Mode::kRandomized : Mode::kDeterministic;
  opts.seed = a.seed;
  opts.vertex_failures = a.vertex_failures;
  opts.field_degree = a.field_degree;
  const auto t0 = std::chrono::steady_clock::now();
  const auto st = preprocess(in.directed_graph(), opts);
  std::printf("preprocess_seconds %.6f\n", seconds_since(t0));
  if (!a.out.empty()) write_file(a.out, serialize(st));
  std::printf("%s\n", yes_no(static_answer(st)));
  return 0;
}

int kpath_query(const KPathArgs& a) {
  const auto st = deserialize_kpath(read_file(a.state));
  const auto& graph = std::visit([](const auto& s) -> const DirectedGraph& { return s.graph; }, st);
  const unsigned k = std::visit([](const auto& s) { return s.k; }, st);
  const auto validation = a.permissive ? Validation::kPermissive : Validation::kStrict;

  std::vector<std::string> files = a.updates;
  if (files.empty()) files.push_back("");
  std::vector<UpdateBatch> batches;
  for (const auto& f : files) batches.push_back(load_updates(f, graph.num_vertices()).normalized(graph, validation));

  std::vector<int> answers(batches.size(), 0);
  std::vector<std::exception_ptr> errors(batches.size());
  const auto run = [&](std::size_t i) {
    try {
      answers[i] = query_answer(st, batches[i], validation) ? 1 : 0;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const auto count = static_cast<std::int64_t>(batches.size());
  if (a.parallel_queries) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) run(static_cast<std::size_t>(i));
  } else {
    for (std::int64_t i = 0; i < count; ++i) run(static_cast<std::size_t>(i));
  }
  for (std::size_t i = 0; i < batches.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    std::printf("%s\n", yes_no(answers[i] != 0));
    if (a.brute_force) {
      const auto updated = batches[i].apply(graph);
      const bool truth = reference::bf_kpath(updated, k, alive_after(graph.num_vertices(), batches[i]));
      std::printf("%s\n", match(truth == (answers[i] != 0)));
    }
  }
  return 0;
}

int kpath_count(const KPathArgs& a) {
  const auto in = parse_graph_file(a.graph);
  if (!in.directed) throw ParseError("kpath expects a directed graph");
  CountOptions opts;
  opts.k = a.k;
  opts.epsilon = a.epsilon;
  opts.seed = a.seed;
  const auto g = in.directed_graph();
  const CountingOracle oracle(g, opts);
  std::string file = a.updates.empty() ? "" : a.updates.front();
  const auto batch = load_updates(file, g.num_vertices()).normalized(g);
  std::printf("COUNT %.6f\n", oracle.estimate(batch));
  if (a.brute_force) {
    const auto truth = reference::bf_kpath_count(batch.apply(g), a.k, alive_after(g.num_vertices(), batch));
    std::printf("EXACT %llu\n", static_cast<unsigned long long>(truth));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// undirected

struct UndirectedArgs {
  std::string graph;
  std::string out;
  std::string state;
  std::string sides;
  std::vector<std::string> updates;
  unsigned k = 4;
  unsigned trials = 0;
  std::uint64_t seed = 1;
  unsigned field_degree = Gf2mField::kDefaultDegree;
  bool brute_force = false;
  bool permissive = false;
};

int undirected_preprocess(const UndirectedArgs& a) {
  const auto in = parse_graph_file(a.graph);
  if (in.directed) throw ParseError("undirected commands expect an undirected graph");
  UndirectedOptions opts;
  opts.k = a.k;
  opts.trials = a.trials;
  opts.seed = a.seed;
  opts.field_degree = a.field_degree;
  const auto g = in.undirected_graph();
  const auto t0 = std::chrono::steady_clock::now();
  const auto oracle = a.sides.empty()
                          ? UndirectedOracle::preprocess(g, opts)
                          : UndirectedOracle::preprocess_bipartite(g, parse_sides_file(a.sides, g.num_vertices()), opts);
  std::printf("preprocess_seconds %.6f\n", seconds_since(t0));
  if (!a.out.empty()) write_file(a.out, serialize(oracle));
  std::printf("%s\n", yes_no(oracle.static_answer()));
  return 0;
}

int undirected_query(const UndirectedArgs& a) {
  const auto oracle = deserialize_undirected(read_file(a.state));
  const auto& g = oracle.graph();
  const auto validation = a.permissive ? Validation::kPermissive : Validation::kStrict;
  std::vector<std::string> files = a.updates;
  if (files.empty()) files.push_back("");
  for (const auto& f : files) {
    const auto batch = load_updates(f, g.num_vertices()).normalized(g, validation);
    const bool ans = oracle.query(batch, validation);
    std::printf("%s\n", yes_no(ans));
    if (a.brute_force) std::printf("%s\n", match(reference::bf_kpath(batch.apply(g), oracle.k()) == ans));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// constrained

struct ConstrainedArgs {
  std::string graph;
  std::string problem = "path";
  std::string updates;
  unsigned k = 3;
  bool brute_force = false;
};

int constrained(const ConstrainedArgs& a) {
  const auto in = parse_graph_file(a.graph);
  if (!in.directed) throw ParseError("constrained problems expect a directed graph");
  const auto g = in.directed_graph();
  const auto batch = load_updates(a.updates, g.num_vertices()).normalized(g);
  const auto updated = batch.apply(g);
  bool ans = false;
  bool truth = false;
  if (a.problem == "walk") {
    ans = query(kwalk_one_repeat_build(g, a.k), batch).answer;
    if (a.brute_force) truth = reference::bf_kwalk_one_repeat(updated, a.k);
  } else {
    const auto spec = in.constraints.value_or(ConstraintSpec{});
    ans = query(constrained_kpath_build(g, a.k, spec), batch).answer;
    if (a.brute_force) truth = reference::bf_constrained_kpath(updated, a.k, spec);
  }
  std::printf("%s\n", yes_no(ans));
  if (a.brute_force) std::printf("%s\n", match(truth == ans));
  return 0;
}

// ---------------------------------------------------------------------------
// dynamic sessions

struct DynamicArgs {
  std::string problem = "exact-cover";
  std::string mode = "det";
  std::string session = "-";
  std::optional<unsigned> k;
  std::optional<unsigned> t;
  unsigned m = 2;
  unsigned d = 3;
  std::uint64_t seed = 1;
  unsigned field_degree = Gf2mField::kDefaultDegree;
  bool count = false;
  double epsilon = 0.5;
  bool brute_force = false;
};

std::vector<Element> to_elements(const SessionLine& l) {
  std::vector<Element> out;
  for (auto x : l.args) {
    if (x > 0xffffffffULL) throw DomainError("element id too large");
    out.push_back(static_cast<Element>(x));
  }
  return out;
}

Handle one_handle(const SessionLine& l) {
  if (l.args.size() != 1) throw DomainError("expected '- handle'");
  return l.args[0];
}

/// Runs a set-system session against `s`, which must provide insert/remove and report answers.
/// With `report_truth` the brute-force answer is printed as is instead of a MATCH line.
template <class Structure, class Answer, class Truth>
void run_set_session(const Session& session, Structure& s, Answer answer, Truth truth, bool brute_force,
                     bool report_truth = false) {
  std::map<Handle, std::vector<Element>> live;
  for (const auto& l : session.lines) {
    try {
      if (l.op == '+') {
        auto elems = to_elements(l);
        const Handle h = s.insert(elems);
        live[h] = normalize_set(elems, 0xffffffffU);
        std::printf("HANDLE %llu\n", static_cast<unsigned long long>(h));
      } else if (l.op == '-') {
        const Handle h = one_handle(l);
        s.remove(h);
        live.erase(h);
      } else if (l.op == '?') {
        const std::string got = answer(s);
        std::printf("%s\n", got.c_str());
        if (brute_force) {
          reference::SetList sets;
          for (const auto& [h, e] : live) sets.push_back(e);
          const std::string want = truth(sets);
          std::printf("%s\n", report_truth ? want.c_str() : match(want == got));
        }
      } else {
        throw DomainError("command not valid for this problem");
      }
    } catch (const Error& e) {
      std::fprintf(stderr, "error: line %zu: %s\n", l.line, e.what());
    }
    std::fflush(stdout);
  }
}

std::string min_text(std::optional<unsigned> t) { return t ? "MIN " + std::to_string(*t) : "NONE"; }

template <class Ring>
int dynamic_sets(const DynamicArgs& a, const Session& session) {
  const auto N = static_cast<std::uint32_t>(session.first);
  const unsigned k = a.k.value_or(static_cast<unsigned>(session.second));
  if (a.problem == "exact-cover") {
    ExactCover<Ring> s(N, k, a.seed, a.field_degree);
    run_set_session(
        session, s, [](const auto& x) { return std::string(yes_no(x.query())); },
        [&](const reference::SetList& sets) { return std::string(yes_no(reference::bf_exact_cover(sets, k))); },
        a.brute_force);
  } else if (a.problem == "partial-cover") {
    PartialCover<Ring> s(N, k, a.seed, a.field_degree);
    run_set_session(
        session, s, [](const auto& x) { return min_text(x.query()); },
        [&](const reference::SetList& sets) { return min_text(reference::bf_partial_cover_min(sets, k)); },
        a.brute_force);
  } else if (a.problem == "packing" && a.count) {
    PackingCounter s(N, a.m, k, a.epsilon, a.seed);
    run_set_session(
        session, s,
        [](const auto& x) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "COUNT %.6f", x.estimate());
          return std::string(buf);
        },
        [&](const reference::SetList& sets) {
          return "EXACT " + std::to_string(reference::bf_packing_count(sets, a.m, k));
        },
        a.brute_force, true);
  } else if (a.problem == "packing") {
    SetPacking<Ring> s(N, a.m, k, a.seed, a.field_degree);
    run_set_session(
        session, s, [](const auto& x) { return std::string(yes_no(x.query())); },
        [&](const reference::SetList& sets) { return std::string(yes_no(reference::bf_packing(sets, a.m, k))); },
        a.brute_force);
  } else {
    throw DomainError("unknown problem " + a.problem);
  }
  return 0;
}

template <class Ring>
int dynamic_tdom(const DynamicArgs& a, const Session& session) {
  const auto n = static_cast<std::uint32_t>(session.first);
  const unsigned t = a.t.value_or(a.k.value_or(static_cast<unsigned>(session.second)));
  DominatingSet<Ring> s(UndirectedGraph(n), t, a.seed, a.field_degree);
  auto vertex = [](std::uint64_t id) {
    if (id == 0) throw DomainError("vertex ids are 1-based");
    return static_cast<Vertex>(id - 1);
  };
  for (const auto& l : session.lines) {
    try {
      if ((l.op == '+' || l.op == '-') && l.args.size() == 2) {
        const auto u = vertex(l.args[0]);
        const auto v = vertex(l.args[1]);
        if (l.op == '+') {
          s.insert_edge(u, v);
        } else {
          s.remove_edge(u, v);
        }
      } else if (l.op == 'v') {
        std::printf("VERTEX %u\n", s.add_vertex() + 1);
      } else if (l.op == 'x' && l.args.size() == 1) {
        s.remove_vertex(vertex(l.args[0]));
      } else if (l.op == '?') {
        const auto got = min_text(s.query());
        std::printf("%s\n", got.c_str());
        if (a.brute_force) {
          std::printf("%s\n", match(min_text(reference::bf_tdom(s.graph(), t, s.alive_mask())) == got));
        }
      } else {
        throw DomainError("expected '+ u v', '- u v', 'v', 'x u' or '?'");
      }
    } catch (const Error& e) {
      std::fprintf(stderr, "error: line %zu: %s\n", l.line, e.what());
    }
    std::fflush(stdout);
  }
  return 0;
}

template <class Ring>
int dynamic_matching(const DynamicArgs& a, const Session& session) {
  const auto N = static_cast<std::uint32_t>(session.first);
  const unsigned k = a.k.value_or(static_cast<unsigned>(session.second));
  DimMatching<Ring> s(a.d, k, N, a.seed, a.field_degree);
  std::map<Handle, std::vector<std::uint32_t>> live;
  for (const auto& l : session.lines) {
    try {
      if (l.op == '+') {
        std::vector<std::uint32_t> t;
        for (auto x : l.args) t.push_back(static_cast<std::uint32_t>(x));
        const Handle h = s.insert(t);
        live[h] = t;
        std::printf("HANDLE %llu\n", static_cast<unsigned long long>(h));
      } else if (l.op == '-') {
        const Handle h = one_handle(l);
        s.remove(h);
        live.erase(h);
      } else if (l.op == '?') {
        const bool got = s.query();
        std::printf("%s\n", yes_no(got));
        if (a.brute_force) {
          reference::TupleList tuples;
          for (const auto& [h, t] : live) tuples.push_back(t);
          std::printf("%s\n", match(reference::bf_ddim(tuples, a.d, k) == got));
        }
      } else {
        throw DomainError("command not valid for matching");
      }
    } catch (const Error& e) {
      std::fprintf(stderr, "error: line %zu: %s\n", l.line, e.what());
    }
    std::fflush(stdout);
  }
  return 0;
}

template <class Ring>
int dynamic_dispatch(const DynamicArgs& a, const Session& session) {
  if (a.problem == "tdom") return dynamic_tdom<Ring>(a, session);
  if (a.problem == "matching") return dynamic_matching<Ring>(a, session);
  return dynamic_sets<Ring>(a, session);
}

int dynamic(const DynamicArgs& a) {
  Session session;
  if (a.session == "-") {
    session = parse_session(std::cin);
  } else {
    std::ifstream in(a.session);
    if (!in) throw ParseError("cannot open " + a.session);
    session = parse_session(in);
  }
  if (a.mode == "rand") return dynamic_dispatch<Gf2mRing>(a, session);
  return dynamic_dispatch<IntegerRing>(a, session);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extensor-coded sensitivity oracles and dynamic set structures"};
  app.require_subcommand(1);

  KPathArgs ka;
  auto* kpath = app.add_subcommand("kpath", "Directed k-path sensitivity oracle");
  kpath->require_subcommand(1);
  auto* kpre = kpath->add_subcommand("preprocess", "Preprocess a directed graph and write the state");
  kpre->add_option("--graph", ka.graph, "Graph file")->required();
  kpre->add_option("--k", ka.k, "Number of path vertices");
  kpre->add_option("--mode", ka.mode, "rand or det")->check(CLI::IsMember({"rand", "det"}));
  kpre->add_option("--seed", ka.seed, "Seed for codes and edge variables");
  kpre->add_option("--field-degree", ka.field_degree, "Field degree d of GF(2^d)");
  kpre->add_flag("--vertex-failures", ka.vertex_failures, "Support vertex failures");
  kpre->add_option("--out", ka.out, "State file to write");
  auto* kq = kpath->add_subcommand("query", "Answer update batches against a stored state");
  kq->add_option("--state", ka.state, "State file")->required();
  kq->add_option("--updates", ka.updates, "Update script; one file per query");
  kq->add_flag("--brute-force", ka.brute_force, "Cross-check against exhaustive search");
  kq->add_flag("--parallel-queries", ka.parallel_queries, "Answer the update files concurrently");
  kq->add_flag("--permissive", ka.permissive, "Drop updates that do not change the graph");
  auto* kc = kpath->add_subcommand("count", "Approximate number of k-paths after an update batch");
  kc->add_option("--graph", ka.graph, "Graph file")->required();
  kc->add_option("--k", ka.k, "Number of path vertices");
  kc->add_option("--epsilon", ka.epsilon, "Relative error target");
  kc->add_option("--seed", ka.seed, "Seed");
  kc->add_option("--updates", ka.updates, "Update script")->expected(0, 1);
  kc->add_flag("--brute-force", ka.brute_force, "Also print the exact count");

  UndirectedArgs ua;
  auto* und = app.add_subcommand("undirected", "Undirected k-path sensitivity oracle");
  und->require_subcommand(1);
  auto* upre = und->add_subcommand("preprocess", "Preprocess an undirected graph and write the state");
  upre->add_option("--graph", ua.graph, "Graph file")->required();
  upre->add_option("--k", ua.k, "Number of path vertices");
  upre->add_option("--trials", ua.trials, "Random partitions (0 = default for k)");
  upre->add_option("--seed", ua.seed, "Seed");
  upre->add_option("--field-degree", ua.field_degree, "Field degree d of GF(2^d)");
  upre->add_option("--bipartite", ua.sides, "Sides file 'V1: ids...' for the bipartite variant");
  upre->add_option("--out", ua.out, "State file to write");
  auto* uq = und->add_subcommand("query", "Answer update batches against a stored state");
  uq->add_option("--state", ua.state, "State file")->required();
  uq->add_option("--updates", ua.updates, "Update script; one file per query");
  uq->add_flag("--brute-force", ua.brute_force, "Cross-check against exhaustive search");
  uq->add_flag("--permissive", ua.permissive, "Drop updates that do not change the graph");

  ConstrainedArgs ca;
  auto* con = app.add_subcommand("constrained", "Occupancy-constrained k-path or k-walk with one repeat");
  con->add_option("--graph", ca.graph, "Directed graph file with optional constraint lines")->required();
  con->add_option("--k", ca.k, "Number of walk vertices");
  con->add_option("--problem", ca.problem, "path or walk")->check(CLI::IsMember({"path", "walk"}));
  con->add_option("--updates", ca.updates, "Update script");
  con->add_flag("--brute-force", ca.brute_force, "Cross-check against exhaustive search");

  DynamicArgs da;
  auto* dyn = app.add_subcommand("dynamic", "Fully dynamic set problems driven by a session script");
  dyn->add_option("--problem", da.problem, "exact-cover, partial-cover, packing, tdom or matching")
      ->check(CLI::IsMember({"exact-cover", "partial-cover", "packing", "tdom", "matching"}));
  dyn->add_option("--k", da.k, "Solution size (defaults to the session header)");
  dyn->add_option("--t", da.t, "Vertices to dominate (tdom)");
  dyn->add_option("--m", da.m, "Set size (packing)");
  dyn->add_option("--d", da.d, "Tuple dimension (matching)");
  dyn->add_option("--mode", da.mode, "rand or det")->check(CLI::IsMember({"rand", "det"}));
  dyn->add_option("--seed", da.seed, "Seed");
  dyn->add_option("--field-degree", da.field_degree, "Field degree d of GF(2^d)");
  dyn->add_flag("--count", da.count, "Approximate packing count instead of detection");
  dyn->add_option("--epsilon", da.epsilon, "Relative error target for --count");
  dyn->add_option("--session", da.session, "Session file, or - for stdin");
  dyn->add_flag("--brute-force", da.brute_force, "Cross-check every query against exhaustive search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (kpre->parsed()) return kpath_preprocess(ka);
    if (kq->parsed()) return kpath_query(ka);
    if (kc->parsed()) return kpath_count(ka);
    if (upre->parsed()) return undirected_preprocess(ua);
    if (uq->parsed()) return undirected_query(ua);
    if (con->parsed()) return constrained(ca);
    if (dyn->parsed()) return dynamic(da);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const CapabilityError& e) {
    std::fprintf(stderr, "unsupported: %s\n", e.what());
    return 3;
  } catch (const VersionError& e) {
    std::fprintf(stderr, "version mismatch: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
