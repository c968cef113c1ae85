#include <benchmark/benchmark.h>

#include "ncosc/assemble.hpp"
#include "ncosc/perturbation.hpp"

using namespace ncosc;

namespace {

PhysicalParams params() {
  PhysicalParams p;
  p.omega_c = 0.7;
  p.theta = 1e-3;
  p.eta = 1e-3;
  return p;
}

}  // namespace

static void BM_Assemble(benchmark::State& state) {
  const PhysicalParams p = params();
  const int cutoff = static_cast<int>(state.range(0));
  const TruncatedBasis basis = enumerate_basis(cutoff, cutoff / 2);
  const NumericOperatorPolynomial poly = evaluate_coefficients(expanded_hamiltonian(), p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble(poly, basis, p));
  }
  state.SetComplexityN(basis.size());
}
BENCHMARK(BM_Assemble)->Arg(6)->Arg(10)->Arg(14)->Complexity();

static void BM_Eigensolve(benchmark::State& state) {
  const PhysicalParams p = params();
  const int cutoff = static_cast<int>(state.range(0));
  const TruncatedBasis basis = enumerate_basis(cutoff, cutoff / 2);
  const HermitianMatrix H =
      assemble(evaluate_coefficients(expanded_hamiltonian(), p), basis, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigensolve(H));
  }
  state.SetComplexityN(basis.size());
}
BENCHMARK(BM_Eigensolve)->Arg(6)->Arg(10)->Arg(14)->Complexity();

static void BM_FullSpectrum(benchmark::State& state) {
  const PhysicalParams p = params();
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_spectrum(p, cutoff, cutoff / 2));
  }
}
BENCHMARK(BM_FullSpectrum)->Arg(8)->Arg(12);

static void BM_FdSlopeGround(benchmark::State& state) {
  const PhysicalParams p = params();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fd_slope(p, NcChannel::Eta, BasisState{0, 0, 0}, 8, 4));
  }
}
BENCHMARK(BM_FdSlopeGround);

BENCHMARK_MAIN();
