// Microbenchmarks for the exact-arithmetic kernels that dominate the
// verification suites: rank/solve over the rationals, hom-space bases,
// approximations, and class decisions on the A2 tilting instance.

#include "fibrant/instances.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace fibrant;

namespace {

Matrix seeded_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-5, 5);
  Field f = Field::rationals();
  Matrix m(n, n, f);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = Scalar(entry(rng), f);
  return m;
}

AlgebraPtr a2() {
  Quiver q;
  q.vertex_count = 2;
  q.arrows = {{0, 1, "a"}};
  return Algebra::make(q, {}, Field::rationals());
}

Module tilting_module(const AlgebraPtr& a) {
  return Module(a, {2, 1}, {Matrix::from_rows({{Rational(1), Rational(0)}}, a->field())});
}

void bench_rank(benchmark::State& state) {
  Matrix m = seeded_matrix(static_cast<std::size_t>(state.range(0)), 0xC0FFEE);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

void bench_solve(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m = seeded_matrix(n, 0xC0FFEE);
  Matrix b = m * seeded_matrix(n, 0xBEEF).column(0);
  for (auto _ : state) benchmark::DoNotOptimize(solve(m, b));
}

void bench_hom_basis(benchmark::State& state) {
  std::size_t copies = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    // hom results are cached per algebra, so build a fresh one each round
    auto a = a2();
    Module t = tilting_module(a);
    Module big = direct_sum(std::vector<Module>(copies, t), a).sum;
    benchmark::DoNotOptimize(hom_basis(big, t));
  }
}

void bench_left_approximation(benchmark::State& state) {
  auto a = a2();
  Module t = tilting_module(a);
  Module reg = regular_module(a);
  for (auto _ : state) benchmark::DoNotOptimize(left_approximation(reg, t));
}

void bench_weq_decision(benchmark::State& state) {
  // class deciders memoize per instance, so rebuild the structure each round
  for (auto _ : state) {
    auto a = a2();
    Module t = tilting_module(a);
    TiltingInstance inst = build_tilting_omega_structure(a, t);
    Module p1(a, {1, 1}, {Matrix::from_rows({{Rational(1)}}, a->field())});
    Module s1(a, {1, 0}, {Matrix::zero(0, 1, a->field())});
    Morphism p(p1, s1,
               {Matrix::from_rows({{Rational(1)}}, a->field()), Matrix::zero(0, 1, a->field())});
    benchmark::DoNotOptimize(weq_membership(p, inst.system));
  }
}

void bench_factorization(benchmark::State& state) {
  for (auto _ : state) {
    auto a = a2();
    Module t = tilting_module(a);
    TiltingInstance inst = build_tilting_omega_structure(a, t);
    Module s2(a, {0, 1}, {Matrix::zero(1, 0, a->field())});
    benchmark::DoNotOptimize(inst.system.factor(zero_morphism(s2, t)));
  }
}

}  // namespace

BENCHMARK(bench_rank)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bench_solve)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bench_hom_basis)->Arg(1)->Arg(4)->Arg(8);
BENCHMARK(bench_left_approximation);
BENCHMARK(bench_weq_decision);
BENCHMARK(bench_factorization);

BENCHMARK_MAIN();
