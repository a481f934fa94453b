#include "valivt/tropical.hpp"

namespace valivt {

TropicalForm TropicalForm::of(const Polynomial& f) {
  if (f.is_zero())
    fail(ErrorKind::precondition, "tropical form of the zero polynomial");
  TropicalForm t;
  t.degree_ = f.degree();
  for (int i = 0; i <= f.degree(); ++i) {
    const FieldElement c = f.coeff(i);
    if (c.is_exact_zero()) continue;
    GroupValue v = c.valuation();  // throws PrecisionError if undetermined
    if (v.is_infinity()) continue;
    t.terms_.push_back({i, v});
  }
  if (t.terms_.empty())
    fail(ErrorKind::precision, "no coefficient with certified valuation");
  return t;
}

GroupValue TropicalForm::eval(const GroupValue& gamma) const {
  if (gamma.is_infinity())
    fail(ErrorKind::precondition, "phi evaluation at infinity");
  GroupValue best;
  bool have = false;
  for (const TropicalTerm& term : terms_) {
    GroupValue v = add(term.coeff_val, scale_int(gamma, term.degree));
    if (!have || v < best) {
      best = v;
      have = true;
    }
  }
  return best;
}

int TropicalForm::active_degree(const GroupValue& gamma) const {
  GroupValue m = eval(gamma);
  for (const TropicalTerm& term : terms_)
    if (add(term.coeff_val, scale_int(gamma, term.degree)) == m)
      return term.degree;
  fail(ErrorKind::structural, "unreachable: no minimizing term");
}

std::vector<SlopeMult> newton_polygon(const TropicalForm& t) {
  // Lower convex hull of (i, v_i), Andrew scan. Degrees are already
  // strictly increasing. Collinear middle points are dropped; the segment
  // multiplicity is the horizontal length.
  const auto& pts = t.terms();
  std::vector<const TropicalTerm*> hull;
  for (const TropicalTerm& p : pts) {
    while (hull.size() >= 2) {
      const TropicalTerm* a = hull[hull.size() - 2];
      const TropicalTerm* b = hull.back();
      // pop b unless it lies strictly below chord a->p
      GroupValue lhs = scale_int(sub(b->coeff_val, a->coeff_val),
                                 static_cast<long>(p.degree - a->degree));
      GroupValue rhs = scale_int(sub(p.coeff_val, a->coeff_val),
                                 static_cast<long>(b->degree - a->degree));
      if (lhs < rhs) break;
      hull.pop_back();
    }
    hull.push_back(&p);
  }
  std::vector<SlopeMult> out;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const TropicalTerm* a = hull[k - 1];
    const TropicalTerm* b = hull[k];
    long width = b->degree - a->degree;
    // root valuation = -(slope), computed in the divisible closure
    std::vector<Rat> h = sub(a->coeff_val, b->coeff_val).coords();
    for (Rat& c : h) c /= width;
    out.push_back({GroupValue(std::move(h)), static_cast<int>(width)});
  }
  // hull slopes rise with degree, so root valuations fall; report ascending
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<SlopeMult> newton_polygon(const Polynomial& f) {
  return newton_polygon(TropicalForm::of(f));
}

GroupValue phi_eval(const Polynomial& f, const GroupValue& gamma) {
  return TropicalForm::of(f).eval(gamma);
}

std::pair<GroupValue, bool> fiber_min(const Polynomial& f,
                                      const GroupValue& alpha) {
  TropicalForm t = TropicalForm::of(f);
  bool multi = false;
  for (const SlopeMult& s : newton_polygon(t))
    if (s.h == alpha) multi = true;
  return {t.eval(alpha), multi};
}

FieldElement realize_min(const Polynomial& f, const GroupValue& gamma,
                         const FieldSpec& spec, int* trials) {
  GroupValue target = phi_eval(f, gamma);
  FieldElement tg = element_with_valuation(spec, gamma);
  int tried = 0;
  const int limit = f.degree() + 2;
  for (int idx = 0;; ++idx) {
    // raises ExhaustedResidues over a finite residue field
    FieldElement u = residue_representative(spec, idx);
    if (u.is_exact_zero()) continue;  // v(u t^gamma) != gamma, skip for free
    FieldElement c = u.mul(tg);
    ++tried;
    if (trials) *trials = tried;
    GroupValue got = f.evaluate(c).valuation();
    if (got == target) return c;
    if (tried >= limit)
      fail(ErrorKind::structural,
           "realize_min exceeded the deg+1 trial bound");
  }
}

}  // namespace valivt
