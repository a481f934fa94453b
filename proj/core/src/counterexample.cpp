#include "valivt/counterexample.hpp"

#include <algorithm>
#include <sstream>

#include "valivt/ivt.hpp"

namespace valivt {

namespace {

void record(CounterexampleReport& rep, const std::string& input,
            const std::string& expected, const std::string& observed,
            bool pass) {
  rep.checks.push_back({input, expected, observed, pass});
}

void conclude(CounterexampleReport& rep) {
  rep.ivt_fails_as_predicted = true;
  for (const CheckRecord& c : rep.checks)
    if (!c.pass) rep.ivt_fails_as_predicted = false;
}

}  // namespace

CounterexampleReport finite_residue_counterexample(
    unsigned long p, const std::vector<long>& sample_grid) {
  FieldSpec spec = FieldSpec::padic(p);
  CounterexampleReport rep;
  rep.model = spec;
  rep.construction = "P(X) = prod_{i=0}^{p-1} (X - i)";
  rep.note =
      "checked predicate: v(x) < 0 => v(P(x)) = p*v(x); "
      "v(x) >= 0 => v(P(x)) > 0";

  Polynomial P = Polynomial::from_roots(
      spec, residue_representatives(spec, static_cast<int>(p)));

  // A few units per grid point, covering more than one residue class.
  std::vector<Rat> units{Rat(1), Rat(static_cast<long>(p) + 1),
                         Rat(2 * static_cast<long>(p) + 1)};
  if (p > 2) units.push_back(Rat(2));

  long min_grid = 0;
  for (long v : sample_grid) min_grid = std::min(min_grid, v);

  for (long v : sample_grid) {
    for (const Rat& u : units) {
      FieldElement x = FieldElement::monomial(spec, u, Rat(v));
      GroupValue got = P.evaluate(x).valuation();
      std::ostringstream in;
      in << "x = " << x.to_string() << " (v = " << v << ")";
      if (v < 0) {
        GroupValue want = GroupValue(Rat(static_cast<long>(p) * v));
        record(rep, in.str(), "v(P(x)) = " + want.to_string(),
               got.to_string(), got == want);
      } else {
        record(rep, in.str(), "v(P(x)) > 0", got.to_string(),
               got > GroupValue(Rat(0)));
      }
    }
  }

  // Consequently no c between a negative-valuation point and a unit attains
  // v(P(c)) = 0: the solver itself must run out of residues.
  if (min_grid < 0) {
    bool witnessed = false;
    std::string observed = "no error";
    try {
      IVTQuery q{P, FieldElement::monomial(spec, Rat(1), Rat(min_grid)),
                 FieldElement::from_rational(spec,
                                             Rat(2 * static_cast<long>(p) + 1)),
                 GroupValue(Rat(0))};
      IVTSolution s = ivt_solve(q);
      observed = "solution c = " + s.c.to_string();
    } catch (const Error& e) {
      witnessed = e.kind() == ErrorKind::exhausted_residues;
      observed = error_kind_name(e.kind());
    }
    record(rep, "ivt_solve(P, v(a) = " + std::to_string(min_grid) +
                    ", alpha = 0)",
           "ExhaustedResidues", observed, witnessed);
  }
  conclude(rep);
  return rep;
}

CounterexampleReport divisibility_counterexample(long n, long h) {
  FieldSpec spec = FieldSpec::laurent();
  CounterexampleReport rep;
  rep.model = spec;
  rep.construction = "P(X) = X^" + std::to_string(n);
  if (n < 2) fail(ErrorKind::precondition, "n must be >= 2");
  if (h <= 0) fail(ErrorKind::precondition, "h must be > 0");
  if (h % n == 0)
    fail(ErrorKind::invalid_counterexample,
         std::to_string(n) + " divides " + std::to_string(h) +
             ", no contradiction available");

  long va = h / n + 1;  // n*v(a) > h
  FieldElement a = FieldElement::monomial(spec, Rat(1), Rat(va));
  Polynomial P(spec, [&] {
    std::vector<FieldElement> c(static_cast<std::size_t>(n) + 1,
                                FieldElement::zero(spec));
    c.back() = FieldElement::one(spec);
    return c;
  }());

  GroupValue v_pa = P.evaluate(a).valuation();
  GroupValue v_painv = P.evaluate(a.inverse()).valuation();
  record(rep, "a = " + a.to_string(),
         "v(P(1/a)) < 0 < h < v(P(a))", v_painv.to_string() + " < 0 < " +
             std::to_string(h) + " < " + v_pa.to_string(),
         v_painv < GroupValue(Rat(0)) && GroupValue(Rat(h)) < v_pa);

  bool witnessed = false;
  std::string observed = "no error";
  try {
    GroupValue g = divide_exact(spec.group(), GroupValue(Rat(h)), n);
    observed = "h/n = " + g.to_string();
  } catch (const Error& e) {
    witnessed = e.kind() == ErrorKind::divisibility;
    observed = error_kind_name(e.kind());
  }
  record(rep, "divide_exact(" + std::to_string(h) + ", " + std::to_string(n) +
                  ")",
         "DivisibilityError", observed, witnessed);

  // The solver agrees on the failure mode.
  witnessed = false;
  observed = "no error";
  try {
    IVTQuery q{P, a, a.inverse(), GroupValue(Rat(h))};
    IVTSolution s = ivt_solve(q);
    observed = "solution c = " + s.c.to_string();
  } catch (const Error& e) {
    witnessed = e.kind() == ErrorKind::divisibility;
    observed = error_kind_name(e.kind());
  }
  record(rep, "ivt_solve(X^" + std::to_string(n) + ", alpha = " +
                  std::to_string(h) + ")",
         "DivisibilityError", observed, witnessed);
  conclude(rep);
  return rep;
}

CounterexampleReport locally_constant_ivt_failure(const FieldSpec& spec,
                                                  const FieldElement& k) {
  CounterexampleReport rep;
  rep.model = spec;
  rep.construction = "f = k on M, f = 1/k off M";

  GroupValue vk = k.valuation();
  if (!(vk > GroupValue(Rat(0))))
    fail(ErrorKind::precondition, "v(k) must be > 0");
  GroupValue vkinv = k.inverse().valuation();

  auto in_M = [](const FieldElement& x) {
    GroupValue v = x.valuation();
    return v.is_infinity() || v > GroupValue(Rat(0));
  };
  auto f = [&](const FieldElement& x) { return in_M(x) ? k : k.inverse(); };

  std::vector<FieldElement> inside, outside;
  if (spec.model == FieldModel::padic) {
    long p = static_cast<long>(spec.p);
    inside = {FieldElement::from_rational(spec, Rat(p)),
              FieldElement::from_rational(spec, Rat(p * p)),
              FieldElement::from_rational(spec, Rat(3 * p))};
    outside = {FieldElement::from_rational(spec, Rat(1)),
               FieldElement::from_rational(spec, Rat(p + 1)),
               FieldElement::from_rational(spec, Rat(1) / Rat(p))};
  } else {
    inside = {FieldElement::monomial(spec, Rat(1), Rat(1)),
              FieldElement::monomial(spec, Rat(1), Rat(2)),
              FieldElement::monomial(spec, Rat(3), Rat(1))};
    outside = {FieldElement::one(spec),
               FieldElement::from_rational(spec, Rat(2)),
               FieldElement::monomial(spec, Rat(1), Rat(-1))};
  }

  // Continuity witness: f is constant on a small ball around every sample.
  for (const auto& pts : {inside, outside}) {
    for (const FieldElement& x : pts) {
      FieldElement eps = FieldElement::monomial(spec, Rat(1), Rat(5));
      bool constant = f(x.add(eps)).equals(f(x));
      record(rep, "ball around " + x.to_string(), "f locally constant",
             constant ? "constant" : "jumps", constant);
    }
  }

  // Attained valuation set on any interval meeting both M and its
  // complement is {v(k), -v(k)}, which misses 0.
  bool zero_attained = false;
  std::ostringstream attained;
  for (const auto& pts : {inside, outside}) {
    for (const FieldElement& x : pts) {
      GroupValue v = f(x).valuation();
      attained << v.to_string() << " ";
      if (v == GroupValue(Rat(0))) zero_attained = true;
      if (!(v == vk || v == vkinv)) zero_attained = true;  // unexpected value
    }
  }
  record(rep, "attained valuations across M boundary",
         "{" + vk.to_string() + ", " + vkinv.to_string() + "}, excluding 0",
         attained.str(), !zero_attained);
  conclude(rep);
  return rep;
}

}  // namespace valivt
