#include <algorithm>
#include <vector>

#include <benchmark/benchmark.h>

#include "safetrust/qad.hpp"
#include "safetrust/rwp.hpp"
#include "safetrust/sim/simulator.hpp"
#include "safetrust/trustworthiness.hpp"

namespace {

using namespace safetrust;

qad::AssessmentMatrix filled(std::size_t n, Rng& rng) {
  qad::AssessmentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng.below(5) != 0) m.set(i, j, qad::Assessment::of(static_cast<int>(rng.below(5)) - 2));
  return m;
}

void BM_StepSociety(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const qad::AssessmentMatrix m = filled(n, rng);
  const std::vector<qad::Operator> ops(n, qad::Operator::ModerateOptimistic);
  for (auto _ : state) benchmark::DoNotOptimize(qad::step_society(m, ops, rng));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StepSociety)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNSquared);

void BM_AggregateMajor(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  std::vector<rwp::Address> society(n);
  for (std::size_t k = 0; k < n; ++k) society[k] = static_cast<rwp::Address>(k);
  std::vector<rwp::MinorUpload> minors;
  for (std::size_t owner = 0; owner < n; ++owner) {
    // Ring neighbourhood: owner and its two neighbours.
    std::vector<rwp::Address> members{static_cast<rwp::Address>(owner)};
    if (n > 1) members.push_back(static_cast<rwp::Address>((owner + 1) % n));
    if (n > 2) members.push_back(static_cast<rwp::Address>((owner + n - 1) % n));
    std::sort(members.begin(), members.end());
    rwp::NeighborhoodMatrix minor(members);
    minor.matrix = filled(members.size(), rng);
    minors.push_back({static_cast<rwp::Address>(owner), std::move(minor), qad::Operator::ConsensusSeeker});
  }
  for (auto _ : state) benchmark::DoNotOptimize(rwp::aggregate_major(minors, society, 0, 60.0, rng));
}
BENCHMARK(BM_AggregateMajor)->RangeMultiplier(2)->Range(8, 128);

void BM_Evaluate(benchmark::State& state) {
  double a = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tw::evaluate(tw::BehaviorCounts(a, 3.0)));
    a = a > 1000 ? 1.0 : a + 1.0;
  }
}
BENCHMARK(BM_Evaluate);

void BM_TrustRelationCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rwp::trust_relation_count(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TrustRelationCount)->Arg(10)->Arg(256);

void BM_Simulation(benchmark::State& state) {
  sim::Scenario s;
  s.motes = static_cast<std::size_t>(state.range(0));
  s.topology = sim::TopologyKind::Grid;
  s.intervals = 10;
  s.engine = static_cast<sim::Engine>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sim::run(s));
}
BENCHMARK(BM_Simulation)->ArgsProduct({{10, 20, 50}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
