#include <numbers>

#include <benchmark/benchmark.h>

#include "qsearch/hamiltonian.hpp"
#include "qsearch/iterative_search.hpp"
#include "qsearch/noise.hpp"
#include "qsearch/phase_ops.hpp"
#include "qsearch/recursive_search.hpp"
#include "qsearch/unitary.hpp"

using namespace qsearch;

namespace {

void BM_WalshHadamard(benchmark::State& st) {
  const auto dim = std::size_t{1} << st.range(0);
  StateVector s = StateVector::basis(dim, 0);
  for (auto _ : st) {
    apply_walsh_hadamard(s);
    benchmark::DoNotOptimize(s[0]);
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(dim));
}
BENCHMARK(BM_WalshHadamard)->DenseRange(10, 22, 4);

void BM_DiagonalPhase(benchmark::State& st) {
  const auto dim = std::size_t{1} << st.range(0);
  const std::size_t t[] = {3};
  NoiseSpec noise;
  noise.delta_t = 0.1;
  noise.seed = 1;
  const auto op = sample_perturbed_inversion(dim, t, noise, SelectiveKind::target);
  StateVector s = StateVector::basis(dim, 0);
  apply_walsh_hadamard(s);
  for (auto _ : st) {
    apply(op, s);
    benchmark::DoNotOptimize(s[0]);
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(dim));
}
BENCHMARK(BM_DiagonalPhase)->DenseRange(10, 22, 4);

void BM_IterativeStep(benchmark::State& st) {
  const auto dim = std::size_t{1} << st.range(0);
  const auto u = UnitaryFamily::walsh_hadamard(dim);
  const std::size_t t[] = {5};
  const auto rt = build_selective_rotation(dim, t, std::numbers::pi / 2);
  const IterativeOperator op(u, rt, std::numbers::pi / 2);
  StateVector s = prepare(u);
  for (auto _ : st) {
    op.apply(s);
    benchmark::DoNotOptimize(s[0]);
  }
}
BENCHMARK(BM_IterativeStep)->DenseRange(10, 20, 5);

void BM_RecursionLevel(benchmark::State& st) {
  const std::size_t dim = std::size_t{1} << 12;
  const auto level = static_cast<unsigned>(st.range(0));
  const auto u = UnitaryFamily::walsh_hadamard(dim);
  const std::size_t t[] = {5};
  const std::size_t z[] = {0};
  const auto s_t = build_selective_inversion(dim, t);
  const auto s_0 = build_selective_inversion(dim, z);
  const RecursiveSearch search(u, s_0, s_t);
  for (auto _ : st) {
    StateVector s = StateVector::basis(dim, 0);
    std::uint64_t queries = 0;
    search.apply_level(s, level, queries);
    benchmark::DoNotOptimize(queries);
  }
}
BENCHMARK(BM_RecursionLevel)->DenseRange(1, 5, 2);

void BM_HamiltonianEvolve(benchmark::State& st) {
  const auto dim = static_cast<std::size_t>(st.range(0));
  const auto u = UnitaryFamily::walsh_hadamard(dim);
  const TargetSet targets(dim, {1});
  const auto h = SearchHamiltonian::fg(u, targets);
  h.eigenvalues();
  const StateVector s0 = prepare(u);
  for (auto _ : st) {
    auto s = evolve(h, s0, 10.0);
    benchmark::DoNotOptimize(s[0]);
  }
}
BENCHMARK(BM_HamiltonianEvolve)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
