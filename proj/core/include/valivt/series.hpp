#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "valivt/ivt.hpp"
#include "valivt/polynomial.hpp"

namespace valivt {

// Certified tail rule: a_n = scale * ratio^(n - start) for n >= start,
// with v(ratio) > 0, so v(a_n) -> infinity and restrictedness is certified
// rather than trusted. The CLI grammar geometric(c, rho, start) maps to
// ratio = t^rho; the element form is closed under scaling and X -> aX.
struct GeometricTail {
  FieldElement scale;
  FieldElement ratio;
  long start = 0;
};

// Polynomial head plus an optional certified geometric tail.
class RestrictedSeries {
 public:
  RestrictedSeries(FieldSpec spec, std::vector<FieldElement> head,
                   std::optional<GeometricTail> tail = std::nullopt);

  static RestrictedSeries from_polynomial(const Polynomial& f);

  const FieldSpec& spec() const { return spec_; }
  const std::vector<FieldElement>& head() const { return head_; }
  const std::optional<GeometricTail>& tail() const { return tail_; }
  bool is_polynomial() const { return !tail_.has_value(); }
  long head_size() const { return static_cast<long>(head_.size()); }

  // Materialized coefficient a_n (tail coefficients computed on demand).
  FieldElement coefficient(long n) const;
  // Certified lower bound for v(a_n); infinity beyond a polynomial head.
  GroupValue coeff_val_bound(long n) const;
  // Smallest D such that v(a_n) >= bound for all n > D.
  long truncation_degree(const Rat& bound) const;
  Polynomial truncate_to_polynomial(long upto) const;

 private:
  FieldSpec spec_;
  std::vector<FieldElement> head_;
  std::optional<GeometricTail> tail_;
};

// inf over n >= N of (v(a_n) + n*alpha): certified lower bound for the
// valuation of the tail beyond N at any point of valuation >= alpha.
// Throws ErrorKind::diverges_at when the tail does not converge there.
GroupValue tail_bound(const RestrictedSeries& S, const GroupValue& alpha,
                      long N);

// Partial sum up to the first N with tail_bound >= pi, tagged with
// precision pi.
FieldElement eval_series(const RestrictedSeries& S, const FieldElement& x,
                         const Rat& pi);

// The normalization S_a(X) = h_a * S(aX): all coefficient valuations >= 0,
// a distinguished index N with coefficient exactly 1 and all larger indices
// strictly positive. Among the minimal-valuation coefficients of S(aX) the
// largest index is taken, so the mod-M reduction has a well-defined monic
// degree N.
std::pair<FieldElement, RestrictedSeries> normalize_at(
    const RestrictedSeries& S, const FieldElement& a,
    std::optional<Rat> work_prec = std::nullopt);

struct WeierstrassFactorization {
  Polynomial P;         // monic, degree N
  RestrictedSeries B;   // congruent to 1 mod M
  Rat precision;        // pi: residual coefficient valuations >= pi
  long N = 0;
};

// Hensel/Weierstrass factorization S_a = P*B at finite precision, by
// successive approximation on the valuation grid. The input must satisfy
// normalize_at's postcondition (ErrorKind::not_normalized otherwise).
WeierstrassFactorization weierstrass_factor(const RestrictedSeries& S_a,
                                            const Rat& pi);

// Series IVT via the factorization route: normalize at a, factor, solve the
// polynomial query on P_a, map back and re-verify at higher precision.
IVTSolution ivt_series_solve(const RestrictedSeries& S, const FieldElement& a,
                             const FieldElement& b, const GroupValue& alpha,
                             const Rat& pi);

// phi_S(gamma) for gamma >= beta, through the polygon of P_b with
// b = t^beta: phi_{P_b}(gamma - beta) - v(h_b).
GroupValue phi_series(const RestrictedSeries& S, const GroupValue& beta,
                      const GroupValue& gamma, const Rat& pi);

// Valuations (with multiplicities) of the zeros of S in the algebraic
// closure with valuation >= v(a): the polygon slopes of P_a shifted by
// v(a). Finite by construction.
std::vector<SlopeMult> zero_valuations_above(const RestrictedSeries& S,
                                             const FieldElement& a,
                                             const Rat& pi);

}  // namespace valivt
