#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"

#include "valivt/parse.hpp"
#include "valivt/series.hpp"

using namespace valivt;

namespace {

const FieldSpec pu = FieldSpec::puiseux();

// sum_n t^n X^n
RestrictedSeries geometric_series() {
  return parse_series(pu, "head: []; tail: geometric(1, 1, 0)");
}

// t + X + sum_{n>=2} t^(n-1) X^n
RestrictedSeries running_example() {
  return parse_series(pu, "head: [t, 1]; tail: geometric(t, 1, 2)");
}

// Random series with all coefficient valuations >= 0.
RestrictedSeries random_integral_series(std::mt19937& rng) {
  std::uniform_int_distribution<int> hs(1, 4);
  std::uniform_int_distribution<long> q(0, 8);
  std::uniform_int_distribution<long> unit(1, 5);
  std::uniform_int_distribution<long> rho(1, 8);
  std::uniform_int_distribution<int> zero(0, 3);
  int h = hs(rng);
  std::vector<FieldElement> head;
  for (int i = 0; i < h; ++i) {
    if (zero(rng) == 0) {
      head.push_back(FieldElement::zero(pu));
      continue;
    }
    head.push_back(FieldElement::monomial(pu, Rat(unit(rng)), frac(q(rng), 4)));
  }
  GeometricTail tail{FieldElement::monomial(pu, Rat(unit(rng)), frac(q(rng), 4)),
                     FieldElement::monomial(pu, Rat(1), frac(rho(rng), 4)),
                     h};
  return RestrictedSeries(pu, std::move(head), tail);
}

}  // namespace

TEST_CASE("certified tail bounds") {
  RestrictedSeries S = geometric_series();
  CHECK(tail_bound(S, GroupValue(Rat(0)), 5) == GroupValue(Rat(5)));
  CHECK(tail_bound(S, GroupValue(Rat(-1, 2)), 4) == GroupValue(Rat(2)));

  RestrictedSeries P = parse_series(pu, "head: [1, t]; tail: none");
  CHECK(tail_bound(P, GroupValue(Rat(-7)), 2).is_infinity());

  CHECK_THROWS_WITH_AS(tail_bound(S, GroupValue(Rat(-1)), 0),
                       doctest::Contains("DivergesAt"), Error);
}

TEST_CASE("series evaluation by certified partial sums") {
  RestrictedSeries S = geometric_series();
  FieldElement v = eval_series(S, FieldElement::one(pu), Rat(4));
  // geometric sum at 1 is 1/(1-t); cross-check against the field inverse
  FieldElement want = parse_element(pu, "1 - t").inverse(Rat(4));
  CHECK(v.sub(want).terms().empty());
  CHECK(*v.precision() == 4);

  RestrictedSeries P = parse_series(pu, "head: [1, 0, -1]; tail: none");
  Polynomial fp = P.truncate_to_polynomial(2);
  FieldElement x = parse_element(pu, "2 + t");
  CHECK(eval_series(P, x, Rat(9)).sub(fp.evaluate(x)).terms().empty());

  CHECK_THROWS_WITH_AS(eval_series(S, parse_element(pu, "t^-1"), Rat(4)),
                       doctest::Contains("DivergesAt"), Error);
}

TEST_CASE("normalization picks the largest minimal-valuation index") {
  RestrictedSeries S = running_example();
  auto [h1, S1] = normalize_at(S, FieldElement::one(pu));
  CHECK(h1.equals(FieldElement::one(pu)));
  CHECK(S1.coefficient(1).equals(FieldElement::one(pu)));
  CHECK(S1.coefficient(0).valuation() == GroupValue(Rat(1)));
  CHECK(S1.coefficient(2).valuation() == GroupValue(Rat(1)));

  auto [h2, S2] = normalize_at(geometric_series(), FieldElement::one(pu));
  CHECK(h2.equals(FieldElement::one(pu)));
  CHECK(S2.coefficient(0).equals(FieldElement::one(pu)));

  auto [h3, S3] =
      normalize_at(geometric_series(), parse_element(pu, "t"));
  CHECK(h3.equals(FieldElement::one(pu)));
  CHECK(S3.coefficient(1).valuation() == GroupValue(Rat(2)));

  CHECK_THROWS_WITH_AS(
      normalize_at(geometric_series(), parse_element(pu, "t^-1")),
      doctest::Contains("DivergesAt"), Error);
}

TEST_CASE("weierstrass factorization on the worked examples") {
  Rat pi(4);
  RestrictedSeries S = running_example();
  WeierstrassFactorization W = weierstrass_factor(S, pi);
  CHECK(W.N == 1);
  CHECK(W.P.degree() == 1);
  CHECK(W.P.coeff(1).equals(FieldElement::one(pu)));
  // the root of P is -t - t^3 + ..., so P = X + t + t^3 up to pi
  FieldElement d0 = W.P.coeff(0).sub(parse_element(pu, "t + t^3"));
  CHECK((d0.terms().empty() ||
         cmp(d0.terms().begin()->first, pi) >= 0));
  // residual below pi everywhere
  Polynomial resid = S.truncate_to_polynomial(S.truncation_degree(pi))
                         .sub(W.P.mul(W.B.truncate_to_polynomial(
                             S.truncation_degree(pi))));
  for (const FieldElement& e : resid.coeffs()) {
    if (e.is_exact_zero()) continue;
    if (e.terms().empty()) continue;  // pure O(t^k), k >= pi
    CHECK(e.valuation() >= GroupValue(pi));
  }
  // B = 1 mod M
  CHECK(W.B.coefficient(0).residue().qval == 1);
  for (long n = 1; n < W.B.head_size(); ++n) {
    const FieldElement& b = W.B.coefficient(n);
    if (!b.is_exact_zero() && !b.terms().empty())
      CHECK(b.valuation() > GroupValue(Rat(0)));
  }

  WeierstrassFactorization Wu = weierstrass_factor(geometric_series(), pi);
  CHECK(Wu.N == 0);
  CHECK(Wu.P.degree() == 0);

  RestrictedSeries Q = parse_series(pu, "head: [-1*t, 0, 1]; tail: none");
  WeierstrassFactorization Wq = weierstrass_factor(Q, pi);
  CHECK(Wq.N == 2);
  CHECK(Wq.P.coeff(0).equals(FieldElement::monomial(pu, Rat(-1), Rat(1))));

  CHECK_THROWS_WITH_AS(
      weierstrass_factor(parse_series(pu, "head: [t^-1, 1]"), pi),
      doctest::Contains("NotNormalized"), Error);
}

TEST_CASE("series intermediate value solver") {
  Rat pi(8);
  RestrictedSeries S = running_example();
  IVTSolution s = ivt_series_solve(S, parse_element(pu, "t"),
                                   FieldElement::one(pu),
                                   GroupValue(Rat(1, 2)), pi);
  CHECK(s.vc == GroupValue(Rat(1, 2)));
  CHECK(s.achieved == GroupValue(Rat(1, 2)));
  CHECK(eval_series(S, s.c, Rat(9)).valuation() == GroupValue(Rat(1, 2)));
  CHECK(GroupValue(Rat(0)) <= s.vc);
  CHECK(s.vc <= GroupValue(Rat(1)));

  // polynomial series delegates bit-exactly
  RestrictedSeries P = parse_series(pu, "head: [-1*t, 0, 1]; tail: none");
  Polynomial f = P.truncate_to_polynomial(2);
  IVTQuery q{f, parse_element(pu, "t"), FieldElement::one(pu),
             GroupValue(Rat(1, 2))};
  IVTSolution sp = ivt_series_solve(P, q.a, q.b, q.alpha, pi);
  CHECK(sp.c.identical_to(ivt_solve(q).c));

  CHECK_THROWS_WITH_AS(
      ivt_series_solve(geometric_series(), parse_element(pu, "t"),
                       FieldElement::one(pu), GroupValue(Rat(1, 2)), pi),
      doctest::Contains("NoGap"), Error);
}

TEST_CASE("phi of a series through the distinguished polynomial") {
  Rat pi(8);
  RestrictedSeries S = running_example();
  CHECK(phi_series(S, GroupValue(Rat(0)), GroupValue(Rat(2)), pi) ==
        GroupValue(Rat(1)));
  CHECK(phi_series(S, GroupValue(Rat(0)), GroupValue(Rat(1, 2)), pi) ==
        GroupValue(Rat(1, 2)));

  RestrictedSeries P = parse_series(pu, "head: [-1*t, 0, 1]; tail: none");
  Polynomial f = P.truncate_to_polynomial(2);
  for (long g = 0; g <= 4; ++g)
    CHECK(phi_series(P, GroupValue(Rat(0)), GroupValue(Rat(g)), pi) ==
          phi_eval(f, GroupValue(Rat(g))));
}

TEST_CASE("zero valuations above a point") {
  Rat pi(8);
  auto z1 = zero_valuations_above(running_example(), FieldElement::one(pu), pi);
  REQUIRE(z1.size() == 1);
  CHECK(z1[0].h == GroupValue(Rat(1)));
  CHECK(z1[0].multiplicity == 1);

  CHECK(zero_valuations_above(geometric_series(), FieldElement::one(pu), pi)
            .empty());

  auto z3 = zero_valuations_above(
      parse_series(pu, "head: [-1*t, 0, 1]; tail: none"),
      FieldElement::one(pu), pi);
  REQUIRE(z3.size() == 1);
  CHECK(z3[0].h == GroupValue(Rat(1, 2)));
  CHECK(z3[0].multiplicity == 2);
}

TEST_CASE("factorization residual stays below pi on random series") {
  std::mt19937 rng(40);
  Rat pi(8);
  int done = 0;
  while (done < 30) {
    RestrictedSeries S0 = random_integral_series(rng);
    auto [h, S] = normalize_at(S0, FieldElement::one(pu), pi + 8);
    WeierstrassFactorization W = weierstrass_factor(S, pi);
    long D = S.truncation_degree(pi);
    Polynomial resid = S.truncate_to_polynomial(D).sub(
        W.P.mul(W.B.truncate_to_polynomial(D)));
    for (const FieldElement& e : resid.coeffs()) {
      if (e.is_exact_zero() || e.terms().empty()) continue;
      CHECK(e.valuation() >= GroupValue(pi));
    }
    CHECK(W.B.coefficient(0).residue().qval == 1);
    ++done;
  }
}

TEST_CASE("normalized evaluation identity") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> q(0, 6);
  std::uniform_int_distribution<long> unit(1, 4);
  Rat pi(8);
  int done = 0;
  while (done < 50) {
    RestrictedSeries S = random_integral_series(rng);
    FieldElement a = FieldElement::monomial(pu, Rat(unit(rng)), frac(q(rng), 4));
    FieldElement x = FieldElement::monomial(pu, Rat(unit(rng)), frac(q(rng), 4));
    auto [h, Sa] = normalize_at(S, a, pi + 16);
    WeierstrassFactorization W = weierstrass_factor(Sa, pi);
    FieldElement lhs_e = eval_series(S, a.mul(x), pi + 8);
    FieldElement rhs_e = W.P.evaluate(x);
    if (lhs_e.terms().empty() || rhs_e.terms().empty()) continue;
    // the identity is certified only while v(P_a(x)) clears the residual
    if (rhs_e.valuation() >= GroupValue(pi)) continue;
    GroupValue lhs = lhs_e.valuation();
    GroupValue rhs = sub(rhs_e.valuation(), h.valuation());
    CHECK(lhs == rhs);
    ++done;
  }
}

TEST_CASE("tail bounds are monotone and unbounded") {
  RestrictedSeries S = running_example();
  for (long n = 0; n < 19; ++n)
    for (long a = -1; a < 19; ++a) {
      if (tail_bound(S, GroupValue(frac(a, 4)), n) >
          tail_bound(S, GroupValue(frac(a, 4)), n + 1))
        FAIL("not monotone in N");
      if (tail_bound(S, GroupValue(frac(a, 4)), n) >
          tail_bound(S, GroupValue(frac(a + 1, 4)), n))
        FAIL("not monotone in alpha");
    }
  for (long target = 1; target <= 50; ++target) {
    long n = 0;
    while (tail_bound(S, GroupValue(Rat(0)), n) < GroupValue(Rat(target))) ++n;
    CHECK(n <= 2 * target + 4);
  }
}
