// Serial vs OpenMP walk propagation, plus the two general-product routes.
#include <benchmark/benchmark.h>

#include <random>

#include "extensor/extensor.hpp"
#include "extensor/kpath_oracle.hpp"
#include "extensor/walk_kernels.hpp"

using namespace extensor;

namespace {

DirectedGraph random_digraph(std::uint32_t n, double out_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(out_degree / n);
  DirectedGraph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

template <class State>
State prepared(Mode mode, std::uint32_t n, unsigned k) {
  KPathOptions o;
  o.k = k;
  o.mode = mode;
  o.seed = 3;
  o.parallel = false;
  const auto any = preprocess(random_digraph(n, 4.0, 11), o);
  return std::get<State>(any);
}

template <class State, bool Parallel>
void BM_Propagate(benchmark::State& bs, Mode mode) {
  auto st = prepared<State>(mode, static_cast<std::uint32_t>(bs.range(0)), static_cast<unsigned>(bs.range(1)));
  for (auto _ : bs) {
    if constexpr (Parallel) {
      propagate_walks_parallel(st);
    } else {
      propagate_walks_serial(st);
    }
    benchmark::DoNotOptimize(st.Z.data());
  }
}

void BM_RandSerial(benchmark::State& s) { BM_Propagate<RandomizedState, false>(s, Mode::kRandomized); }
void BM_RandParallel(benchmark::State& s) { BM_Propagate<RandomizedState, true>(s, Mode::kRandomized); }
void BM_DetSerial(benchmark::State& s) { BM_Propagate<DeterministicState, false>(s, Mode::kDeterministic); }
void BM_DetParallel(benchmark::State& s) { BM_Propagate<DeterministicState, true>(s, Mode::kDeterministic); }

void BM_WedgeChar2(benchmark::State& bs) {
  const auto D = static_cast<unsigned>(bs.range(0));
  Gf2mRing ring(std::make_shared<const Gf2mField>(16));
  std::mt19937_64 rng(1);
  Extensor<Gf2mRing> x(ring, D), y(ring, D);
  for (auto& c : x.coeffs()) c = ring.field->element(rng() & 0xffff);
  for (auto& c : y.coeffs()) c = ring.field->element(rng() & 0xffff);
  for (auto _ : bs) benchmark::DoNotOptimize(wedge_char2(x, y));
}

void BM_WedgeNaive(benchmark::State& bs) {
  const auto D = static_cast<unsigned>(bs.range(0));
  Gf2mRing ring(std::make_shared<const Gf2mField>(16));
  std::mt19937_64 rng(1);
  Extensor<Gf2mRing> x(ring, D), y(ring, D);
  for (auto& c : x.coeffs()) c = ring.field->element(rng() & 0xffff);
  for (auto& c : y.coeffs()) c = ring.field->element(rng() & 0xffff);
  for (auto _ : bs) benchmark::DoNotOptimize(wedge_naive(x, y));
}

}  // namespace

BENCHMARK(BM_RandSerial)->Args({64, 6})->Args({128, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandParallel)->Args({64, 6})->Args({128, 8})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DetSerial)->Args({32, 4})->Args({48, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetParallel)->Args({32, 4})->Args({48, 5})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_WedgeChar2)->DenseRange(6, 12, 2);
BENCHMARK(BM_WedgeNaive)->DenseRange(6, 12, 2);

BENCHMARK_MAIN();
