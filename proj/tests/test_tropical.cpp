#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"

#include "valivt/parse.hpp"
#include "valivt/tropical.hpp"

using namespace valivt;

namespace {

const FieldSpec pu = FieldSpec::puiseux();

// f = lc * prod (X - u_i t^{q_i}): v(f(x)) = v(lc) + sum min(v(x), q_i),
// which is the closed form of phi off the root valuations.
struct FactoredPoly {
  Polynomial f{FieldSpec::puiseux()};
  Rat lead_val;
  std::vector<Rat> root_vals;  // finite valuations only
  int zero_roots = 0;          // roots at 0 (valuation infinity)
};

FactoredPoly random_factored(std::mt19937& rng, int max_deg = 5) {
  std::uniform_int_distribution<int> nd(1, max_deg);
  std::uniform_int_distribution<long> q(-8, 8);  // quarters
  std::uniform_int_distribution<long> unit(1, 5);
  std::uniform_int_distribution<int> at_zero(0, 4);
  FactoredPoly out;
  std::vector<FieldElement> roots;
  int deg = nd(rng);
  for (int i = 0; i < deg; ++i) {
    if (at_zero(rng) == 0) {
      roots.push_back(FieldElement::zero(pu));
      ++out.zero_roots;
      continue;
    }
    Rat qv = frac(q(rng), 4);
    roots.push_back(FieldElement::monomial(pu, Rat(unit(rng)), qv));
    out.root_vals.push_back(qv);
  }
  out.f = Polynomial::from_roots(pu, roots);
  out.lead_val = Rat(0);
  std::sort(out.root_vals.begin(), out.root_vals.end(), RatLess());
  return out;
}

Rat phi_oracle(const FactoredPoly& fp, const Rat& gamma) {
  Rat s = fp.lead_val + Rat(fp.zero_roots) * gamma;
  for (const Rat& h : fp.root_vals) s += cmp(gamma, h) < 0 ? gamma : h;
  return s;
}

}  // namespace

TEST_CASE("newton polygon of small polynomials") {
  Polynomial f = parse_polynomial(pu, "X^2 - t");
  auto slopes = newton_polygon(f);
  REQUIRE(slopes.size() == 1);
  CHECK(slopes[0].h == GroupValue(Rat(1, 2)));
  CHECK(slopes[0].multiplicity == 2);
  // the slope really is a root valuation: f(t^(1/2)) = 0 exactly
  CHECK(f.evaluate(FieldElement::monomial(pu, Rat(1), Rat(1, 2)))
            .is_exact_zero());
  CHECK(f.evaluate(FieldElement::monomial(pu, Rat(-1), Rat(1, 2)))
            .is_exact_zero());

  Polynomial g = Polynomial::from_roots(
      pu, {FieldElement::monomial(pu, Rat(1), Rat(1)),
           FieldElement::monomial(pu, Rat(1), Rat(2))});
  auto gs = newton_polygon(g);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0].h == GroupValue(Rat(1)));
  CHECK(gs[0].multiplicity == 1);
  CHECK(gs[1].h == GroupValue(Rat(2)));
  CHECK(gs[1].multiplicity == 1);

  CHECK(newton_polygon(parse_polynomial(pu, "X^3")).empty());
}

TEST_CASE("phi evaluation") {
  Polynomial f = parse_polynomial(pu, "X^2 - t");
  CHECK(phi_eval(f, GroupValue(Rat(0))) == GroupValue(Rat(0)));
  CHECK(phi_eval(f, GroupValue(Rat(1, 2))) == GroupValue(Rat(1)));
  CHECK(phi_eval(f, GroupValue(Rat(2))) == GroupValue(Rat(1)));
}

TEST_CASE("fiber description") {
  Polynomial f = parse_polynomial(pu, "X^2 - t");
  auto [m1, multi1] = fiber_min(f, GroupValue(Rat(1, 2)));
  CHECK(m1 == GroupValue(Rat(1)));
  CHECK(multi1);
  auto [m2, multi2] = fiber_min(f, GroupValue(Rat(2)));
  CHECK(m2 == GroupValue(Rat(1)));
  CHECK(!multi2);
  auto [m3, multi3] = fiber_min(Polynomial::identity(pu), GroupValue(Rat(5)));
  CHECK(m3 == GroupValue(Rat(5)));
  CHECK(!multi3);
}

TEST_CASE("realizing the minimum on a fiber") {
  Polynomial f = parse_polynomial(pu, "X^2 - X");
  int trials = 0;
  FieldElement c = realize_min(f, GroupValue(Rat(0)), pu, &trials);
  CHECK(c.valuation() == GroupValue(Rat(0)));
  CHECK(f.evaluate(c).valuation() == GroupValue(Rat(0)));
  CHECK(trials <= f.degree() + 1);

  FieldElement c2 = realize_min(Polynomial::identity(pu), GroupValue(Rat(5)), pu);
  CHECK(c2.identical_to(FieldElement::monomial(pu, Rat(1), Rat(5))));

  Polynomial g = parse_polynomial(pu, "X^2 - t");
  FieldElement c3 = realize_min(g, GroupValue(Rat(1, 2)), pu);
  CHECK(c3.valuation() == GroupValue(Rat(1, 2)));
  CHECK(g.evaluate(c3).valuation() == GroupValue(Rat(1)));
}

TEST_CASE("tropical lower bound, equality off polygon slopes") {
  std::mt19937 rng(10);
  std::uniform_int_distribution<long> q(-8, 8);
  std::uniform_int_distribution<long> coeff(-4, 4);
  for (int i = 0; i < 300; ++i) {
    FactoredPoly fp = random_factored(rng);
    FieldElement::TermMap terms;
    int nt = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < nt; ++j) {
      long cc = coeff(rng);
      terms[frac(q(rng), 4)] = Rat(cc == 0 ? 1 : cc);
    }
    FieldElement x = FieldElement::from_terms(pu, std::move(terms));
    GroupValue vx = x.valuation();
    GroupValue vfx = fp.f.evaluate(x).valuation();
    GroupValue bound = phi_eval(fp.f, vx);
    CHECK(vfx >= bound);
    bool on_slope = false;
    for (const SlopeMult& s : newton_polygon(fp.f))
      if (s.h == vx) on_slope = true;
    if (!on_slope) CHECK(vfx == bound);
  }
}

TEST_CASE("polygon recovers factor valuations exactly") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    FactoredPoly fp = random_factored(rng);
    std::vector<Rat> got;
    for (const SlopeMult& s : newton_polygon(fp.f))
      for (int k = 0; k < s.multiplicity; ++k) got.push_back(s.h.scalar());
    CHECK(got == fp.root_vals);
  }
}

TEST_CASE("phi matches the factored closed form on every segment") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<long> off(-9, 9);
  for (int i = 0; i < 200; ++i) {
    FactoredPoly fp = random_factored(rng);
    for (int j = 0; j < 8; ++j) {
      Rat gamma = frac(off(rng), 8);
      CHECK(phi_eval(fp.f, GroupValue(gamma)) == GroupValue(phi_oracle(fp, gamma)));
    }
  }
}

TEST_CASE("realize_min trial bound") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> q(-8, 8);
  for (int i = 0; i < 200; ++i) {
    FactoredPoly fp = random_factored(rng);
    GroupValue gamma(frac(q(rng), 4));
    int trials = 0;
    FieldElement c = realize_min(fp.f, gamma, pu, &trials);
    CHECK(c.valuation() == gamma);
    CHECK(fp.f.evaluate(c).valuation() == phi_eval(fp.f, gamma));
    CHECK(trials <= fp.f.degree() + 1);
  }
}
