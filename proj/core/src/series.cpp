#include "valivt/series.hpp"

#include <algorithm>

namespace valivt {

namespace {

Rat ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rat(q);
}

bool coeff_val_at_least(const FieldElement& e, const Rat& bound) {
  if (e.is_exact_zero()) return true;
  if (e.terms().empty()) return e.precision() && cmp(*e.precision(), bound) >= 0;
  return cmp(e.terms().begin()->first, bound) >= 0;
}

Polynomial truncate_coeffs(const Polynomial& f, const Rat& pi) {
  std::vector<FieldElement> c = f.coeffs();
  for (FieldElement& x : c) x = x.truncated(pi);
  return Polynomial(f.spec(), std::move(c));
}

// A coefficient with no terms and only a precision tag is zero to the
// certified precision; drop the tag so downstream valuation queries treat
// it as zero instead of throwing.
Polynomial drop_bare_precision(const Polynomial& f) {
  std::vector<FieldElement> c = f.coeffs();
  for (FieldElement& x : c)
    if (!x.is_exact_zero() && x.terms().empty()) x = FieldElement::zero(f.spec());
  return Polynomial(f.spec(), std::move(c));
}

}  // namespace

RestrictedSeries::RestrictedSeries(FieldSpec spec,
                                   std::vector<FieldElement> head,
                                   std::optional<GeometricTail> tail)
    : spec_(std::move(spec)), head_(std::move(head)), tail_(std::move(tail)) {
  if (spec_.model == FieldModel::padic)
    fail(ErrorKind::structural, "restricted series need a series field model");
  if (tail_ && tail_->scale.is_exact_zero()) tail_.reset();
  if (tail_) {
    GroupValue vr = tail_->ratio.valuation();
    if (!(vr.is_finite() && vr > GroupValue(Rat(0))))
      fail(ErrorKind::precondition,
           "tail ratio must have strictly positive valuation");
    if (tail_->start < head_size())
      fail(ErrorKind::precondition, "tail start must not overlap the head");
  }
}

RestrictedSeries RestrictedSeries::from_polynomial(const Polynomial& f) {
  return RestrictedSeries(f.spec(), f.coeffs());
}

FieldElement RestrictedSeries::coefficient(long n) const {
  if (n < 0) fail(ErrorKind::precondition, "negative coefficient index");
  if (n < head_size()) return head_[static_cast<std::size_t>(n)];
  if (tail_ && n >= tail_->start)
    return tail_->scale.mul(tail_->ratio.pow(n - tail_->start));
  return FieldElement::zero(spec_);
}

GroupValue RestrictedSeries::coeff_val_bound(long n) const {
  if (n < head_size()) return head_[static_cast<std::size_t>(n)].valuation();
  if (tail_ && n >= tail_->start)
    return add(tail_->scale.valuation(),
               scale_int(tail_->ratio.valuation(), n - tail_->start));
  return GroupValue::infinity();
}

long RestrictedSeries::truncation_degree(const Rat& bound) const {
  long D = std::max<long>(head_size() - 1, 0);
  if (!tail_) return D;
  Rat vs = tail_->scale.valuation_rat();
  Rat vr = tail_->ratio.valuation_rat();
  // smallest n with vs + (n - start) vr >= bound
  Rat n_min = Rat(tail_->start) + (bound - vs) / vr;
  long n = ceil_rat(n_min).get_num().get_si();
  return std::max({D, n - 1, tail_->start - 1});
}

Polynomial RestrictedSeries::truncate_to_polynomial(long upto) const {
  std::vector<FieldElement> c;
  c.reserve(static_cast<std::size_t>(upto + 1));
  for (long n = 0; n <= upto; ++n) c.push_back(coefficient(n));
  return Polynomial(spec_, std::move(c));
}

GroupValue tail_bound(const RestrictedSeries& S, const GroupValue& alpha,
                      long N) {
  if (alpha.is_infinity())
    fail(ErrorKind::precondition, "tail bound at infinite valuation");
  const Rat& a = alpha.scalar();
  GroupValue best = GroupValue::infinity();
  for (long n = std::max(N, 0L); n < S.head_size(); ++n) {
    GroupValue v = S.coeff_val_bound(n);
    if (v.is_infinity()) continue;
    GroupValue term = add(v, GroupValue(Rat(n) * a));
    if (term < best) best = term;
  }
  if (S.tail()) {
    Rat vs = S.tail()->scale.valuation_rat();
    Rat vr = S.tail()->ratio.valuation_rat();
    if (cmp(vr + a, Rat(0)) <= 0)
      fail(ErrorKind::diverges_at,
           "series does not converge at valuation " + alpha.to_string());
    long n0 = std::max(N, S.tail()->start);
    GroupValue term(vs + Rat(n0 - S.tail()->start) * vr + Rat(n0) * a);
    if (term < best) best = term;
  }
  return best;
}

FieldElement eval_series(const RestrictedSeries& S, const FieldElement& x,
                         const Rat& pi) {
  GroupValue vx = x.valuation();
  if (vx.is_infinity()) return S.coefficient(0).truncated(pi);

  long N = 0;
  while (tail_bound(S, vx, N) < GroupValue(pi)) {
    if (++N > 1000000)
      fail(ErrorKind::diverges_at, "partial sums grow too slowly");
  }
  // Powers of x may be multiplied by coefficients of negative valuation,
  // so keep them a safe margin beyond pi before the final truncation.
  Rat margin(0);
  for (long n = 0; n < N; ++n) {
    GroupValue v = S.coeff_val_bound(n);
    if (!v.is_infinity() && cmp(v.scalar(), -margin) < 0) margin = -v.scalar();
  }
  if (cmp(vx.scalar(), Rat(0)) < 0) margin -= Rat(N) * vx.scalar();
  Rat xp_prec = pi + margin + 1;

  FieldElement acc = FieldElement::zero(S.spec());
  FieldElement xp = FieldElement::one(S.spec());
  for (long n = 0; n < N; ++n) {
    FieldElement c = S.coefficient(n);
    if (!c.is_exact_zero()) acc = acc.add(c.mul(xp));
    xp = xp.mul(x).truncated(xp_prec);
  }
  return acc.truncated(pi);
}

std::pair<FieldElement, RestrictedSeries> normalize_at(
    const RestrictedSeries& S, const FieldElement& a,
    std::optional<Rat> work_prec) {
  GroupValue va_g = a.valuation();
  if (va_g.is_infinity())
    fail(ErrorKind::precondition, "normalization point must be nonzero");
  Rat va = va_g.scalar();

  // Valuations of the coefficients of S(aX); the tail part is strictly
  // increasing, so only its first index can attain the minimum.
  std::optional<Rat> vmin;
  long N = -1;
  for (long n = 0; n < S.head_size(); ++n) {
    GroupValue v = S.coeff_val_bound(n);
    if (v.is_infinity()) continue;
    Rat cand = v.scalar() + Rat(n) * va;
    if (!vmin || cmp(cand, *vmin) <= 0) {
      vmin = cand;
      N = n;
    }
  }
  if (S.tail()) {
    Rat vr = S.tail()->ratio.valuation_rat();
    if (cmp(vr + va, Rat(0)) <= 0)
      fail(ErrorKind::diverges_at, "series does not converge at a");
    long start = S.tail()->start;
    Rat cand = S.tail()->scale.valuation_rat() + Rat(start) * va;
    if (!vmin || cmp(cand, *vmin) <= 0) {
      vmin = cand;
      N = start;
    }
  }
  if (!vmin)
    fail(ErrorKind::precondition, "cannot normalize the zero series");

  FieldElement bN = S.coefficient(N).mul(a.pow(N));
  FieldElement h_a = bN.inverse(work_prec);

  std::vector<FieldElement> head;
  head.reserve(static_cast<std::size_t>(S.head_size()));
  FieldElement ap = FieldElement::one(S.spec());
  for (long n = 0; n < S.head_size(); ++n) {
    head.push_back(h_a.mul(ap).mul(S.coefficient(n)));
    ap = ap.mul(a);
  }
  std::optional<GeometricTail> tail;
  if (S.tail()) {
    tail = GeometricTail{
        h_a.mul(S.tail()->scale).mul(a.pow(S.tail()->start)),
        S.tail()->ratio.mul(a), S.tail()->start};
  }
  return {h_a, RestrictedSeries(S.spec(), std::move(head), std::move(tail))};
}

WeierstrassFactorization weierstrass_factor(const RestrictedSeries& S_a,
                                            const Rat& pi) {
  const FieldSpec& spec = S_a.spec();
  if (cmp(pi, Rat(0)) <= 0)
    fail(ErrorKind::precondition, "target precision must be positive");

  // Distinguished degree: the largest index of coefficient valuation 0;
  // everything beyond must lie in M.
  long N = -1;
  std::optional<Rat> delta;  // minimal positive coefficient valuation
  long probe = S_a.is_polynomial() ? S_a.head_size() - 1
                                   : std::max(S_a.head_size() - 1,
                                              S_a.tail()->start);
  for (long n = 0; n <= probe; ++n) {
    GroupValue v = S_a.coeff_val_bound(n);
    if (v.is_infinity()) continue;
    if (v < GroupValue(Rat(0)))
      fail(ErrorKind::not_normalized, "coefficient valuation below 0");
    if (v == GroupValue(Rat(0))) {
      N = n;
    } else if (!delta || cmp(v.scalar(), *delta) < 0) {
      delta = v.scalar();
    }
  }
  if (N < 0)
    fail(ErrorKind::not_normalized, "no coefficient of valuation 0");
  {
    ResidueElement r = S_a.coefficient(N).residue();
    ResidueElement one = FieldElement::one(spec).residue();
    if (!(r == one))
      fail(ErrorKind::not_normalized, "distinguished coefficient must reduce to 1");
  }
  if (S_a.tail()) {
    Rat vr = S_a.tail()->ratio.valuation_rat();
    delta = (delta && cmp(*delta, vr) < 0) ? *delta : vr;
  }

  long D = std::max(S_a.truncation_degree(pi), N);
  Polynomial Shat = S_a.truncate_to_polynomial(D);

  std::vector<FieldElement> p0(static_cast<std::size_t>(N) + 1,
                               FieldElement::zero(spec));
  for (long n = 0; n < N; ++n) p0[static_cast<std::size_t>(n)] = Shat.coeff(n);
  p0[static_cast<std::size_t>(N)] = FieldElement::one(spec);
  Polynomial P(spec, std::move(p0));
  Polynomial B = Polynomial::constant(FieldElement::one(spec));

  Rat step = delta ? *delta : Rat(1);
  long max_iter = ceil_rat(pi / step).get_num().get_si() + 4;
  for (long it = 0;; ++it) {
    Polynomial E = truncate_coeffs(Shat.sub(P.mul(B)), pi);
    bool done = true;
    for (const FieldElement& e : E.coeffs())
      if (!coeff_val_at_least(e, pi)) done = false;
    if (done) break;
    if (it >= max_iter)
      fail(ErrorKind::structural, "factorization failed to contract");
    auto [q, r] = E.divmod_monic(P);
    P = P.add(r);
    B = B.add(q);
  }

  WeierstrassFactorization out{
      drop_bare_precision(P),
      RestrictedSeries(spec, drop_bare_precision(B).coeffs()), pi, N};
  return out;
}

namespace {

IVTSolution ivt_series_attempt(const RestrictedSeries& S, const FieldElement& a,
                               const FieldElement& b, const GroupValue& alpha,
                               const Rat& pi) {
  const FieldSpec& spec = S.spec();
  if (alpha.is_infinity())
    fail(ErrorKind::precondition, "alpha must be finite");

  Rat wp = pi + abs(alpha.scalar()) + 8;
  FieldElement sa = eval_series(S, a, wp);
  FieldElement sb = eval_series(S, b, wp);
  GroupValue vsa = sa.valuation();
  GroupValue vsb = sb.valuation();
  GroupValue lo = std::min(vsa, vsb);
  GroupValue hi = std::max(vsa, vsb);
  if (!(lo < alpha && alpha < hi))
    fail(ErrorKind::no_gap,
         "alpha is not strictly between v(S(a)) = " + vsa.to_string() +
             " and v(S(b)) = " + vsb.to_string());

  auto [h_a, S_a] = normalize_at(S, a, wp);
  WeierstrassFactorization W = weierstrass_factor(S_a, pi);

  GroupValue alpha_shift = add(alpha, h_a.valuation());
  FieldElement x_b = b.mul(a.inverse(wp));
  IVTQuery q{W.P, FieldElement::one(spec), x_b, alpha_shift};
  IVTSolution inner = ivt_solve(q);

  IVTSolution sol = inner;
  sol.c = a.mul(inner.c);
  sol.vc = sol.c.valuation();

  // Re-verify against the series itself at a higher precision.
  Rat above_alpha = alpha.scalar() + 4;
  Rat verify_prec = cmp(pi, above_alpha) >= 0 ? pi : above_alpha;
  FieldElement sc = eval_series(S, sol.c, verify_prec);
  GroupValue got = sc.valuation();
  if (got != alpha)
    fail(ErrorKind::verification_failed,
         "v(S(c)) = " + got.to_string() + " != " + alpha.to_string());
  sol.achieved = got;
  return sol;
}

}  // namespace

IVTSolution ivt_series_solve(const RestrictedSeries& S, const FieldElement& a,
                             const FieldElement& b, const GroupValue& alpha,
                             const Rat& pi) {
  if (S.is_polynomial()) {
    // B = 1 path: bit-exact agreement with the polynomial solver.
    Polynomial f = S.truncate_to_polynomial(S.head_size() - 1);
    return ivt_solve({f, a, b, alpha});
  }
  GroupValue va = a.valuation();
  GroupValue vb = b.valuation();
  const FieldElement& a0 = va <= vb ? a : b;
  const FieldElement& b0 = va <= vb ? b : a;
  try {
    return ivt_series_attempt(S, a0, b0, alpha, pi);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::verification_failed) throw;
    return ivt_series_attempt(S, a0, b0, alpha, pi * 2);  // one retry
  }
}

GroupValue phi_series(const RestrictedSeries& S, const GroupValue& beta,
                      const GroupValue& gamma, const Rat& pi) {
  if (gamma < beta)
    fail(ErrorKind::precondition, "gamma must be >= beta");
  FieldElement b = element_with_valuation(S.spec(), beta);
  auto [h_b, S_b] = normalize_at(S, b, pi + abs(beta.scalar()) * 2 + 8);
  WeierstrassFactorization W = weierstrass_factor(S_b, pi);
  return sub(phi_eval(W.P, sub(gamma, beta)), h_b.valuation());
}

std::vector<SlopeMult> zero_valuations_above(const RestrictedSeries& S,
                                             const FieldElement& a,
                                             const Rat& pi) {
  auto [h_a, S_a] = normalize_at(S, a, pi + 8);
  WeierstrassFactorization W = weierstrass_factor(S_a, pi);
  GroupValue va = a.valuation();
  std::vector<SlopeMult> out;
  if (W.P.degree() == 0) return out;  // unit series, no zeros above v(a)
  for (const SlopeMult& s : newton_polygon(W.P))
    out.push_back({add(s.h, va), s.multiplicity});
  return out;
}

}  // namespace valivt
