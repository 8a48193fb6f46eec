#include <benchmark/benchmark.h>

#include <random>

#include "meralab/heisenberg.hpp"
#include "meralab/linalg.hpp"
#include "meralab/mera.hpp"

using namespace meralab;

namespace {

ComplexMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  ComplexMatrix m(n, n);
  for (auto& z : m.entries()) z = {u(rng), u(rng)};
  return m;
}

void BM_Matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(matmul(a, b));
}

void BM_MatmulSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(serial::matmul(a, b));
}

void BM_Hamiltonian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(heisenberg::hamiltonian(n, heisenberg::Boundary::Periodic));
}

void BM_HamiltonianSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(heisenberg::serial::hamiltonian(n, heisenberg::Boundary::Periodic));
}

void BM_Sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mera::sweep(-0.7, 0.7, static_cast<int>(state.range(0))));
}

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mera::serial::sweep(-0.7, 0.7, static_cast<int>(state.range(0))));
}

void BM_SectorEigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto block = heisenberg::sector_hamiltonian(n, heisenberg::Boundary::Periodic, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(eigvalsh(block));
}

}  // namespace

BENCHMARK(BM_Matmul)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_MatmulSerial)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_Hamiltonian)->Arg(8)->Arg(10);
BENCHMARK(BM_HamiltonianSerial)->Arg(8)->Arg(10);
BENCHMARK(BM_Sweep)->Arg(101)->Arg(401);
BENCHMARK(BM_SweepSerial)->Arg(101)->Arg(401);
BENCHMARK(BM_SectorEigenvalues)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
