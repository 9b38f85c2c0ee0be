#include <benchmark/benchmark.h>

#include "momenta/spectral.hpp"

namespace {

using momenta::MomentFunctional;
using momenta::PolynomialFamily;

void GramNumeric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PolynomialFamily newton = PolynomialFamily::newton(2 * n);
  auto mu = momenta::truncated_poisson(0.7);
  auto tau = momenta::forward_moments(mu, newton, 2 * n);
  momenta::gram_numeric(tau.values(), newton, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(momenta::gram_numeric(tau.values(), newton, n));
}
BENCHMARK(GramNumeric)->Arg(4)->Arg(8)->Arg(16);

void IsPositiveNumeric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PolynomialFamily newton = PolynomialFamily::newton(2 * n);
  auto mu = momenta::truncated_poisson(0.7);
  auto tau = momenta::forward_moments(mu, newton, 2 * n);
  for (auto _ : state)
    benchmark::DoNotOptimize(momenta::is_positive(tau, newton, n));
}
BENCHMARK(IsPositiveNumeric)->Arg(4)->Arg(8);

void ReconstructPoisson(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PolynomialFamily newton = PolynomialFamily::newton(2 * n);
  auto mu = momenta::truncated_poisson(0.7, 1e-30);
  auto tau = momenta::forward_moments(mu, newton, 2 * n);
  for (auto _ : state)
    benchmark::DoNotOptimize(momenta::reconstruct_measure(tau, newton, n));
}
BENCHMARK(ReconstructPoisson)->Arg(4)->Arg(8);

}  // namespace
