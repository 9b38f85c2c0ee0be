#include <benchmark/benchmark.h>

#include <random>

#include "momenta/convolution.hpp"

namespace {

using momenta::ExactSequence;
using momenta::PolynomialFamily;
using momenta::Rational;
using momenta::RealSequence;

ExactSequence random_exact(int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = Rational(num(rng), den(rng));
  if (c.back().is_zero()) c.back() = 1;
  return ExactSequence(std::move(c));
}

RealSequence random_real(int degree, std::mt19937& rng) {
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::vector<double> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = coeff(rng);
  return RealSequence(std::move(c));
}

void ConvNewtonExact(benchmark::State& state) {
  std::mt19937 rng(1);
  const int degree = static_cast<int>(state.range(0));
  ExactSequence f = random_exact(degree, rng);
  ExactSequence g = random_exact(degree, rng);
  for (auto _ : state) benchmark::DoNotOptimize(conv_newton(f, g));
}
BENCHMARK(ConvNewtonExact)->Arg(4)->Arg(8)->Arg(16);

void ConvGeneralNewtonExact(benchmark::State& state) {
  std::mt19937 rng(1);
  const int degree = static_cast<int>(state.range(0));
  PolynomialFamily newton = PolynomialFamily::newton(2 * degree);
  ExactSequence f = random_exact(degree, rng);
  ExactSequence g = random_exact(degree, rng);
  conv_general(f, g, newton);  // warm the structure-constant cache
  for (auto _ : state) benchmark::DoNotOptimize(conv_general(f, g, newton));
}
BENCHMARK(ConvGeneralNewtonExact)->Arg(4)->Arg(8)->Arg(16);

void ConvGeneralNewtonReal(benchmark::State& state) {
  std::mt19937 rng(1);
  const int degree = static_cast<int>(state.range(0));
  PolynomialFamily newton = PolynomialFamily::newton(2 * degree);
  RealSequence f = random_real(degree, rng);
  RealSequence g = random_real(degree, rng);
  conv_general(f, g, newton);
  for (auto _ : state) benchmark::DoNotOptimize(conv_general(f, g, newton));
}
BENCHMARK(ConvGeneralNewtonReal)->Arg(4)->Arg(8)->Arg(16);

void StructureTableBuild(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PolynomialFamily newton = PolynomialFamily::newton(order);
    momenta::StructureTable table(newton, order);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(StructureTableBuild)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
