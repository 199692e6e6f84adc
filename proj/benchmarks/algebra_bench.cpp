#include <benchmark/benchmark.h>

#include <vector>

#include "bateman/operators.hpp"
#include "bateman/series.hpp"
#include "bateman/squeeze.hpp"
#include "bateman/vacuum.hpp"

namespace {

using namespace bateman;

void BM_PseudoCommutator(benchmark::State& state) {
  const LinDiffOp a = make_pseudo(PseudoOp::A1), b = make_pseudo(PseudoOp::B1);
  for (auto _ : state) benchmark::DoNotOptimize(commutator(a, b));
}
BENCHMARK(BM_PseudoCommutator);

// Composition of powers of a raising operator: cost grows with the normal-ordering expansion.
void BM_ComposePower(benchmark::State& state) {
  const LinDiffOp up = make_ladder(0, LadderKind::Raise, 1), down = make_ladder(0, LadderKind::Lower, 1);
  for (auto _ : state) {
    LinDiffOp acc = down;
    for (int i = 0; i < state.range(0); ++i) acc = op_compose(up, acc);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ComposePower)->RangeMultiplier(2)->Range(2, 16);

void BM_HamiltonianForms(benchmark::State& state) {
  const ExactOscillatorParams p{Rational(3, 2), Rational(2), Rational(1, 5)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hamiltonian_build(p, HamiltonianForm::Ladder) -
                             hamiltonian_build(p, HamiltonianForm::PseudoNumber));
  }
}
BENCHMARK(BM_HamiltonianForms);

void BM_GaussianAnsatz(benchmark::State& state) {
  const std::vector<LinDiffOp> ops{make_pseudo(PseudoOp::A1), make_pseudo(PseudoOp::A2)};
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_ansatz_solve(ops));
}
BENCHMARK(BM_GaussianAnsatz);

void BM_MultiplierReduction(benchmark::State& state) {
  const std::vector<LinDiffOp> ops{make_pseudo(PseudoOp::A1), make_pseudo(PseudoOp::A2)};
  for (auto _ : state) benchmark::DoNotOptimize(multiplier_reduction(ops));
}
BENCHMARK(BM_MultiplierReduction);

void BM_SqueezeFactoredAction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(squeeze_factored_action(static_cast<int>(state.range(0))));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SqueezeFactoredAction)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_ExactPartialSums(benchmark::State& state) {
  const SeriesTerms series = squeeze_norm_series();
  for (auto _ : state) benchmark::DoNotOptimize(series.terms_through(state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExactPartialSums)->RangeMultiplier(10)->Range(100, 10000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Raabe(benchmark::State& state) {
  const SeriesTerms series = squeeze_norm_series();
  for (auto _ : state) benchmark::DoNotOptimize(raabe_test(series, state.range(0)));
}
BENCHMARK(BM_Raabe)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
