#include <benchmark/benchmark.h>

#include "spectau/correlators.hpp"
#include "spectau/hyperelliptic.hpp"
#include "spectau/random.hpp"
#include "spectau/theta.hpp"

using namespace spectau;

namespace {

const ProjectorSet& projectors() {
  static const ProjectorSet proj = [] {
    Rng rng(1);
    auto W = random_matrix_polynomial(rng, 4, 1);
    return compute_projectors(W, correlator_truncation(4, 2));
  }();
  return proj;
}

const ThetaContext& genus_two() {
  static const ThetaContext ctx = [] {
    Rng rng(2);
    auto s = random_hyperelliptic(rng, 2);
    return period_matrix(make_hyperelliptic_curve(hyperelliptic_q(s.a, s.b, s.c)));
  }();
  return ctx;
}

void correlator_sum(benchmark::State& state, Execution ex) {
  const auto& proj = projectors();
  IndexTuple a = {0, 1, 2, 3};
  long T = correlator_truncation(4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(correlator_numerator(proj, a, T, ex));
}

void lattice_sum(benchmark::State& state, Execution ex) {
  const auto& ctx = genus_two();
  CVector u = {cd(0.3, 0.2), cd(-0.1, 0.4)};
  std::vector<CVector> dirs = {{1, 0}, {0, 1}, {1, 1}, {cd(0.5, 1), 2}};
  for (auto _ : state) benchmark::DoNotOptimize(directional_sums(u, ctx, dirs, ex));
}

}  // namespace

BENCHMARK_CAPTURE(correlator_sum, serial, Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(correlator_sum, parallel, Execution::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(lattice_sum, serial, Execution::serial)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(lattice_sum, parallel, Execution::parallel)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
