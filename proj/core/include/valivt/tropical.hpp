#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "valivt/polynomial.hpp"

namespace valivt {

// Min-plus representation of phi_f: the finite set of affine terms
// (degree i, v(a_i)) for coefficients of finite valuation. Terms with
// zero coefficient never achieve the minimum and are dropped.
struct TropicalTerm {
  int degree = 0;
  GroupValue coeff_val;
};

class TropicalForm {
 public:
  static TropicalForm of(const Polynomial& f);

  const std::vector<TropicalTerm>& terms() const { return terms_; }
  int degree() const { return degree_; }
  int min_degree() const { return terms_.front().degree; }

  // phi_f(gamma) = min over terms of coeff_val + i*gamma.
  GroupValue eval(const GroupValue& gamma) const;
  // Smallest degree among the terms achieving the minimum at gamma; this is
  // the slope of phi_f immediately to the right of gamma.
  int active_degree(const GroupValue& gamma) const;

 private:
  std::vector<TropicalTerm> terms_;  // degrees strictly increasing
  int degree_ = 0;
};

// One Newton-polygon slope: h is a root valuation of f in the algebraic
// closure, multiplicity the number of roots attaining it.
struct SlopeMult {
  GroupValue h;
  int multiplicity = 0;
};

// Lower convex hull of the points (i, v(a_i)); h values ascending. Roots at
// zero (valuation infinity) are not listed.
std::vector<SlopeMult> newton_polygon(const Polynomial& f);
std::vector<SlopeMult> newton_polygon(const TropicalForm& t);

GroupValue phi_eval(const Polynomial& f, const GroupValue& gamma);

// (min of v(f(x)) on the fiber v(x)=alpha, whether the fiber is multi-valued)
std::pair<GroupValue, bool> fiber_min(const Polynomial& f,
                                      const GroupValue& alpha);

// Element c with v(c)=gamma and v(f(c)) = phi_f(gamma), found by scanning
// unit residue representatives; at most deg(f)+1 candidates are tried.
FieldElement realize_min(const Polynomial& f, const GroupValue& gamma,
                         const FieldSpec& spec, int* trials = nullptr);

}  // namespace valivt
