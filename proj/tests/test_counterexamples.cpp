#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "valivt/counterexample.hpp"
#include "valivt/ivt.hpp"
#include "valivt/parse.hpp"

using namespace valivt;

namespace {

const std::vector<long> grid{-3, -2, -1, 0, 1, 2, 3};

}

TEST_CASE("finite residue field separates v(P(x)) away from 0") {
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    CounterexampleReport rep = finite_residue_counterexample(p, grid);
    CHECK(rep.ivt_fails_as_predicted);
    for (const CheckRecord& c : rep.checks) {
      INFO(c.input, " expected ", c.expected, " observed ", c.observed);
      CHECK(c.pass);
    }
  }

  // spot checks straight from the construction
  FieldSpec p2 = FieldSpec::padic(2);
  Polynomial P = Polynomial::from_roots(
      p2, {FieldElement::zero(p2), FieldElement::one(p2)});
  CHECK(P.evaluate(FieldElement::from_rational(p2, Rat(1, 2))).valuation() ==
        GroupValue(Rat(-2)));
  CHECK(P.evaluate(FieldElement::from_rational(p2, Rat(3))).valuation() ==
        GroupValue(Rat(1)));

  FieldSpec p5 = FieldSpec::padic(5);
  Polynomial P5 = Polynomial::from_roots(p5, residue_representatives(p5, 5));
  // 7*6*5*4*3 has exactly one factor divisible by 5
  CHECK(P5.evaluate(FieldElement::from_rational(p5, Rat(7))).valuation() ==
        GroupValue(Rat(1)));
}

TEST_CASE("non-divisible value group blocks n-th parts") {
  for (auto [n, h] : {std::pair{2L, 1L}, {3L, 1L}, {3L, 2L}}) {
    CounterexampleReport rep = divisibility_counterexample(n, h);
    CHECK(rep.ivt_fails_as_predicted);
    for (const CheckRecord& c : rep.checks) {
      INFO(c.input, " expected ", c.expected, " observed ", c.observed);
      CHECK(c.pass);
    }
  }

  CHECK_THROWS_WITH_AS(divisibility_counterexample(2, 4),
                       doctest::Contains("InvalidCounterexample"), Error);
}

TEST_CASE("locally constant function with no intermediate valuation") {
  FieldSpec pu = FieldSpec::puiseux();

  auto rep1 = locally_constant_ivt_failure(pu, parse_element(pu, "t"));
  CHECK(rep1.ivt_fails_as_predicted);

  FieldSpec p3 = FieldSpec::padic(3);
  auto rep2 = locally_constant_ivt_failure(
      p3, FieldElement::from_rational(p3, Rat(3)));
  CHECK(rep2.ivt_fails_as_predicted);

  auto rep3 = locally_constant_ivt_failure(pu, parse_element(pu, "t^(1/2)"));
  CHECK(rep3.ivt_fails_as_predicted);

  CHECK_THROWS_AS(locally_constant_ivt_failure(pu, FieldElement::one(pu)),
                  Error);
}

TEST_CASE("the solver agrees with the counterexample failure modes") {
  FieldSpec p3 = FieldSpec::padic(3);
  Polynomial P = Polynomial::from_roots(p3, residue_representatives(p3, 3));
  CHECK_THROWS_WITH_AS(
      ivt_solve({P, FieldElement::from_rational(p3, Rat(1, 3)),
                 FieldElement::from_rational(p3, Rat(7)), GroupValue(Rat(0))}),
      doctest::Contains("ExhaustedResidues"), Error);

  FieldSpec la = FieldSpec::laurent();
  Polynomial cube = parse_polynomial(la, "X^3");
  CHECK_THROWS_WITH_AS(
      ivt_solve({cube, parse_element(la, "t"), parse_element(la, "t^-1"),
                 GroupValue(Rat(2))}),
      doctest::Contains("DivisibilityError"), Error);
}
