#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "valivt/ivt.hpp"
#include "valivt/parse.hpp"
#include "valivt/series.hpp"

using namespace valivt;

namespace {

const FieldSpec pu = FieldSpec::puiseux();

Rat quarter(long n) {
  Rat r(n, 4);
  r.canonicalize();
  return r;
}

Polynomial make_poly(int deg, std::mt19937& rng) {
  std::uniform_int_distribution<long> q(-8, 8);
  std::uniform_int_distribution<long> unit(1, 5);
  std::vector<FieldElement> roots;
  for (int i = 0; i < deg; ++i)
    roots.push_back(FieldElement::monomial(pu, Rat(unit(rng)), quarter(q(rng))));
  return Polynomial::from_roots(pu, roots);
}

void bm_phi_eval(benchmark::State& state) {
  std::mt19937 rng(0);
  Polynomial f = make_poly(static_cast<int>(state.range(0)), rng);
  GroupValue gamma(quarter(3));
  for (auto _ : state) benchmark::DoNotOptimize(phi_eval(f, gamma));
}
BENCHMARK(bm_phi_eval)->Arg(4)->Arg(8)->Arg(16);

void bm_newton_polygon(benchmark::State& state) {
  std::mt19937 rng(1);
  Polynomial f = make_poly(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(newton_polygon(f));
}
BENCHMARK(bm_newton_polygon)->Arg(4)->Arg(8)->Arg(16);

void bm_ivt_solve(benchmark::State& state) {
  std::mt19937 rng(2);
  Polynomial f = make_poly(static_cast<int>(state.range(0)), rng);
  FieldElement a = FieldElement::monomial(pu, Rat(1), Rat(-2));
  FieldElement b = FieldElement::monomial(pu, Rat(1), Rat(2));
  GroupValue va = f.evaluate(a).valuation();
  GroupValue vb = f.evaluate(b).valuation();
  GroupValue alpha((va.scalar() + vb.scalar()) / 2);
  IVTQuery q{f, a, b, alpha};
  for (auto _ : state) benchmark::DoNotOptimize(ivt_solve(q));
}
BENCHMARK(bm_ivt_solve)->Arg(3)->Arg(6)->Arg(10);

void bm_weierstrass_factor(benchmark::State& state) {
  RestrictedSeries S =
      parse_series(pu, "head: [t, 1]; tail: geometric(t, 1, 2)");
  Rat pi(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weierstrass_factor(S, pi));
}
BENCHMARK(bm_weierstrass_factor)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
