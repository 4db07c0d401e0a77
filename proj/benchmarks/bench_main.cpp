#include <random>

#include <benchmark/benchmark.h>

#include "pwmra/filterbank.hpp"
#include "pwmra/hyperjacobi.hpp"
#include "pwmra/refine.hpp"
#include "pwmra/xform.hpp"

namespace {

using namespace pwmra;

void BM_ScalarQuadMul(benchmark::State& state) {
  const Scalar a = Scalar::parse("7/15 + -4/15*sqrt(14)");
  const Scalar b = Scalar::parse("3/7 + 2/5*sqrt(14)");
  for (auto _ : state) benchmark::DoNotOptimize(a * b + a / b);
}
BENCHMARK(BM_ScalarQuadMul);

void BM_JacobiMonic(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_monic(n, Rational(2), Rational(3)));
}
BENCHMARK(BM_JacobiMonic)->Arg(4)->Arg(8)->Arg(16);

void BM_InnerProduct(benchmark::State& state) {
  const PiecewisePoly f = phi_basis(12, 0, 12);
  const PiecewisePoly g = dilate_translate(f, 1, Rational(0));
  for (auto _ : state) benchmark::DoNotOptimize(inner_product(f, g));
}
BENCHMARK(BM_InnerProduct);

void BM_AssemblePhi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_phi(n, Family::generic));
}
BENCHMARK(BM_AssemblePhi)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BuildRefinement(benchmark::State& state) {
  const ScalingVector phi = assemble_phi(static_cast<int>(state.range(0)), Family::generic);
  for (auto _ : state) benchmark::DoNotOptimize(build_refinement(phi));
}
BENCHMARK(BM_BuildRefinement)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_FourierU(benchmark::State& state) {
  const double w = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fourier_u(1, 2, 6, w));
}
BENCHMARK(BM_FourierU)->Arg(1)->Arg(20);

void BM_QuadratureOracle(benchmark::State& state) {
  const PiecewisePoly f = l0(6);
  for (auto _ : state) benchmark::DoNotOptimize(quadrature_oracle(f, 5.0));
}
BENCHMARK(BM_QuadratureOracle);

void BM_FilterBankRoundTrip(benchmark::State& state) {
  const int n = 4;
  const ScalingVector phi = assemble_phi(n, Family::rational4n);
  const FilterBank fb = FilterBank::from(build_refinement(phi), phi);
  std::mt19937_64 gen(7);
  std::normal_distribution<double> nd;
  CoeffStream s(static_cast<std::size_t>(state.range(0)), CoeffVec(fb.width()));
  for (auto& v : s) {
    for (auto& x : v) x = nd(gen);
  }
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(fb, analyze(fb, s, 3)));
}
BENCHMARK(BM_FilterBankRoundTrip)->Arg(64)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
