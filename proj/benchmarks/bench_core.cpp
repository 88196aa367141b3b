#include <benchmark/benchmark.h>

#include <random>

#include "dyadic/field.hpp"
#include "dyadic/scalar.hpp"

using namespace dyadic;

namespace {

Scalar rnd_unit(const Field& F, std::mt19937_64& rng) {
  FieldSpec::Digits d(static_cast<std::size_t>(F->N()));
  for (auto& x : d) x = static_cast<std::uint16_t>(rng() % F->q());
  d[0] = static_cast<std::uint16_t>(1 + rng() % (F->q() - 1));
  return Scalar::unit(F, d);
}

void bench_mul(benchmark::State& state, const char* cfg) {
  Field F = FieldSpec::parse(cfg);
  std::mt19937_64 rng(7);
  Scalar a = rnd_unit(F, rng), b = rnd_unit(F, rng);
  for (auto _ : state) {
    Scalar c = a * b;
    benchmark::DoNotOptimize(c);
  }
}

void bench_inv(benchmark::State& state, const char* cfg) {
  Field F = FieldSpec::parse(cfg);
  std::mt19937_64 rng(7);
  Scalar a = rnd_unit(F, rng);
  for (auto _ : state) {
    Scalar c = a.inverse();
    benchmark::DoNotOptimize(c);
  }
}

void bench_psi(benchmark::State& state, const char* cfg) {
  Field F = FieldSpec::parse(cfg);
  std::mt19937_64 rng(7);
  Psi psi{F};
  Scalar a = rnd_unit(F, rng).shifted(-3);
  for (auto _ : state) {
    auto r = psi(a);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK_CAPTURE(bench_mul, q2, "q2");
BENCHMARK_CAPTURE(bench_mul, q2x2, "q2x2");
BENCHMARK_CAPTURE(bench_mul, f2t, "f2t");
BENCHMARK_CAPTURE(bench_inv, q2, "q2");
BENCHMARK_CAPTURE(bench_inv, q2x2, "q2x2");
BENCHMARK_CAPTURE(bench_psi, q2, "q2");
BENCHMARK_CAPTURE(bench_psi, q2x2, "q2x2");

BENCHMARK_MAIN();
