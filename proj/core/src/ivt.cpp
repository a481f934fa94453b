#include "valivt/ivt.hpp"

#include <algorithm>

namespace valivt {

const char* ivt_case_name(IVTCase c) {
  return c == IVTCase::segment_inversion ? "segment-inversion"
                                         : "breakpoint-shift";
}

GroupValue solve_segment(const Polynomial& f, const GroupValue& alpha,
                         std::optional<GroupValue> lo,
                         std::optional<GroupValue> hi, SegmentInfo* seg) {
  if (!lo || lo->is_infinity())
    fail(ErrorKind::structural, "solve_segment needs a finite left endpoint");
  if (alpha.is_infinity())
    fail(ErrorKind::precondition, "alpha must be finite");
  TropicalForm t = TropicalForm::of(f);
  const GroupSpec gs = f.spec().group();

  // Knot list: lo, the polygon breakpoints inside the range, then hi.
  std::vector<GroupValue> knots{*lo};
  for (const SlopeMult& s : newton_polygon(t)) {
    if (s.h <= *lo) continue;
    if (hi && s.h >= *hi) continue;
    knots.push_back(s.h);
  }
  if (hi) {
    if (*hi < *lo) fail(ErrorKind::precondition, "empty range");
    if (*hi > *lo) knots.push_back(*hi);
  }

  if (alpha < t.eval(knots.front()))
    fail(ErrorKind::no_segment, "alpha below the minimum of phi on the range");

  for (std::size_t j = 0; j < knots.size(); ++j) {
    GroupValue pv = t.eval(knots[j]);
    if (pv == alpha) return knots[j];  // breakpoint tie convention
    if (pv > alpha) {
      // alpha sits on the open segment left of knots[j]; the affine piece
      // there is the smallest minimizing degree at the previous knot.
      int B = t.active_degree(knots[j - 1]);
      GroupValue A = sub(t.eval(knots[j - 1]), scale_int(knots[j - 1], B));
      if (B == 0) fail(ErrorKind::structural, "flat segment cannot rise");
      GroupValue eta = divide_exact(gs, sub(alpha, A), B);
      if (seg) *seg = SegmentInfo{A, B};
      return eta;
    }
  }

  if (hi)
    fail(ErrorKind::no_segment, "alpha above the maximum of phi on the range");

  // Right-unbounded range: the final affine piece has slope equal to the
  // smallest degree with finite coefficient valuation.
  int B = t.active_degree(knots.back());
  if (B == 0)
    fail(ErrorKind::no_segment, "alpha above the plateau of phi");
  GroupValue A = sub(t.eval(knots.back()), scale_int(knots.back(), B));
  GroupValue eta = divide_exact(gs, sub(alpha, A), B);
  if (seg) *seg = SegmentInfo{A, B};
  return eta;
}

FieldElement realize_intermediate(const Polynomial& f, const FieldElement& w0,
                                  const GroupValue& alpha,
                                  const FieldSpec& spec, int* retries,
                                  GroupValue* gamma_out) {
  GroupValue h = w0.valuation();
  if (h.is_infinity())
    fail(ErrorKind::precondition, "shift point must be nonzero");
  GroupValue vf0 = f.evaluate(w0).valuation();
  if (alpha >= vf0)
    fail(ErrorKind::hypothesis_violation,
         "alpha >= v(f(w0)); use w0 itself or re-orient");
  GroupValue phih = phi_eval(f, h);
  if (alpha < phih)
    fail(ErrorKind::precondition, "alpha below phi_f(v(w0))");

  if (alpha == phih) {
    // Step 1 of the construction: any residue away from the root residues.
    int trials = 0;
    FieldElement w = realize_min(f, h, spec, &trials);
    if (retries) *retries = trials - 1;
    if (gamma_out) *gamma_out = h;
    return w;
  }

  // The polygon slopes of g(X) = f(w0 + X) are the valuations v(w0 - z_i),
  // which is exactly the breakpoint data the construction needs.
  Polynomial g = f.taylor_shift(w0);
  GroupValue gamma = solve_segment(g, alpha, h, std::nullopt);
  if (gamma_out) *gamma_out = gamma;
  FieldElement tg = element_with_valuation(spec, gamma);

  int failures = 0;
  const int limit = f.degree() + 2;
  for (int idx = 0;; ++idx) {
    FieldElement u = residue_representative(spec, idx);
    if (u.is_exact_zero()) continue;
    FieldElement w = w0.add(u.mul(tg));
    if (w.valuation() == h && f.evaluate(w).valuation() == alpha) {
      if (retries) *retries = failures;
      return w;
    }
    if (++failures >= limit)
      fail(ErrorKind::structural,
           "residue retry exceeded the deg(f) bound");
  }
}

namespace {

struct Oriented {
  FieldElement a, b;  // v(f(a)) > alpha > v(f(b))
};

Oriented orient(const IVTQuery& q) {
  GroupValue vfa = q.f.evaluate(q.a).valuation();
  GroupValue vfb = q.f.evaluate(q.b).valuation();
  if (vfa > q.alpha && q.alpha > vfb) return {q.a, q.b};
  if (vfb > q.alpha && q.alpha > vfa) return {q.b, q.a};
  fail(ErrorKind::precondition,
       "alpha must lie strictly between v(f(a)) and v(f(b))");
}

}  // namespace

IVTSolution ivt_solve(const IVTQuery& q) {
  const FieldSpec& spec = q.f.spec();
  Oriented o = orient(q);
  GroupValue va = o.a.valuation();
  GroupValue vb = o.b.valuation();
  if (va.is_infinity() || vb.is_infinity())
    fail(ErrorKind::precondition, "endpoints must be nonzero");

  IVTSolution sol;
  GroupValue phia = phi_eval(q.f, va);
  if (q.alpha <= phia) {
    // Case 1: invert the affine segment, then realize the minimum on the
    // eta fiber.
    GroupValue lo = std::min(va, vb, [](auto& x, auto& y) { return x < y; });
    GroupValue hi = std::max(va, vb, [](auto& x, auto& y) { return x < y; });
    SegmentInfo seg{GroupValue::zero(), -1};
    GroupValue eta = solve_segment(q.f, q.alpha, lo, hi, &seg);
    int trials = 0;
    sol.c = realize_min(q.f, eta, spec, &trials);
    sol.vc = eta;
    sol.kase = IVTCase::segment_inversion;
    if (seg.slope >= 0) sol.segment = seg;
    sol.retries = trials - 1;
  } else {
    // Case 2: v(a) is a root valuation; shift at a.
    int retries = 0;
    sol.c = realize_intermediate(q.f, o.a, q.alpha, spec, &retries);
    sol.vc = va;
    sol.kase = IVTCase::breakpoint_shift;
    sol.shift_point = o.a;
    sol.retries = retries;
  }
  sol.achieved = q.f.evaluate(sol.c).valuation();
  if (sol.achieved != q.alpha)
    fail(ErrorKind::structural, "solver postcondition violated");
  return sol;
}

std::vector<IVTSolution> ivt_enumerate(const IVTQuery& q, int k) {
  if (k < 1) fail(ErrorKind::precondition, "k must be >= 1");
  IVTSolution base = ivt_solve(q);
  const FieldSpec& spec = q.f.spec();
  Oriented o = orient(q);

  GroupValue gamma = base.vc;
  FieldElement center = FieldElement::zero(spec);
  if (base.kase == IVTCase::breakpoint_shift) {
    center = o.a;
    int retries = 0;
    realize_intermediate(q.f, o.a, q.alpha, spec, &retries, &gamma);
  }
  FieldElement tg = element_with_valuation(spec, gamma);

  std::vector<IVTSolution> out;
  for (int idx = 0; static_cast<int>(out.size()) < k; ++idx) {
    FieldElement u = residue_representative(spec, idx);
    if (u.is_exact_zero()) continue;
    FieldElement c = center.add(u.mul(tg));
    GroupValue vc = c.valuation();
    if (vc != base.vc) continue;
    if (q.f.evaluate(c).valuation() != q.alpha) continue;
    IVTSolution s = base;
    s.c = c;
    s.vc = vc;
    s.achieved = q.alpha;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace valivt
