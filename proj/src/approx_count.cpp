#include "extensor/approx_count.hpp"

#include <cmath>

#include "extensor/error.hpp"
#include "extensor/prf.hpp"

namespace extensor {

unsigned counting_trials(double epsilon, double calibration) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw DomainError("epsilon must lie in (0, 1]");
  return static_cast<unsigned>(std::ceil(calibration / (epsilon * epsilon)));
}

CodeVector<IntegerRing> random_sign_vector(std::uint64_t seed, std::uint64_t trial, std::uint64_t item, unsigned dims) {
  CodeVector<IntegerRing> v;
  v.entries.reserve(dims);
  for (unsigned t = 0; t < dims; ++t) {
    const bool neg = (prf64(seed, {prf_tag::kTrial, trial, item, t}) & 1U) != 0;
    v.entries.emplace_back(neg ? -1 : 1);
  }
  return v;
}

double factorial(unsigned k) {
  double f = 1.0;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

CountingOracle::CountingOracle(const DirectedGraph& g, const CountOptions& opts) : k_(opts.k) {
  if (opts.k == 0) throw DomainError("k must be at least 1");
  check_dims(2 * opts.k);
  const unsigned r = counting_trials(opts.epsilon, opts.calibration);
  states_.reserve(r);
  for (unsigned t = 0; t < r; ++t) {
    DeterministicState st;
    st.mode = Mode::kDeterministic;
    st.embedding = Embedding::kIdentity;
    st.k = opts.k;
    st.dims = 2 * opts.k;
    st.max_len = opts.k;
    st.seed = opts.seed;
    st.graph = g;
    st.internal = g;
    st.start_eligible.assign(g.num_vertices(), 1);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      st.codes.push_back(FactoredCode<IntegerRing>::lifted(st.ring, random_sign_vector(opts.seed, t, v, opts.k)));
    }
    build_walk_sums(st, opts.parallel);
    states_.push_back(std::move(st));
  }
}

std::vector<double> CountingOracle::trial_values(const UpdateBatch& batch) const {
  std::vector<double> out;
  out.reserve(states_.size());
  const double norm = lift_sign(k_) / factorial(k_);
  for (const auto& st : states_) out.push_back(query(st, batch).witness.to_double() * norm);
  return out;
}

double CountingOracle::estimate(const UpdateBatch& batch) const {
  const auto values = trial_values(batch);
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace extensor
