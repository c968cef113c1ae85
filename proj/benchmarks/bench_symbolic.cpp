#include <benchmark/benchmark.h>

#include "ncosc/bopp.hpp"
#include "ncosc/hamiltonians.hpp"
#include "ncosc/verify.hpp"

using namespace ncosc;

static void BM_BoppShiftH0(benchmark::State& state) {
  const OperatorPolynomial h0 = ops::H0();
  for (auto _ : state) {
    benchmark::DoNotOptimize(bopp_shift(h0));
  }
}
BENCHMARK(BM_BoppShiftH0);

static void BM_CollectOrders(benchmark::State& state) {
  const OperatorPolynomial expanded = bopp_shift(ops::H0());
  for (auto _ : state) {
    benchmark::DoNotOptimize(collect_orders(expanded));
  }
}
BENCHMARK(BM_CollectOrders);

static void BM_PolyMulSquares(benchmark::State& state) {
  const OperatorPolynomial a = bopp_image(Op::x) * bopp_image(Op::p_y);
  const OperatorPolynomial b = bopp_image(Op::p_x) * bopp_image(Op::z);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly_mul(a, b));
  }
}
BENCHMARK(BM_PolyMulSquares);

static void BM_VerifyExpansion(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_expansion());
  }
}
BENCHMARK(BM_VerifyExpansion);

BENCHMARK_MAIN();
