#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "valivt/group.hpp"

namespace valivt {

enum class FieldModel { padic, laurent, puiseux };

// A concrete valued field: Q with the p-adic valuation, truncated Laurent
// series over Q, or truncated Puiseux series over Q.
struct FieldSpec {
  FieldModel model = FieldModel::puiseux;
  unsigned long p = 0;  // only for padic

  static FieldSpec padic(unsigned long prime);
  static FieldSpec laurent() { return FieldSpec{FieldModel::laurent, 0}; }
  static FieldSpec puiseux() { return FieldSpec{FieldModel::puiseux, 0}; }

  GroupSpec group() const;
  bool has_infinite_residue_field() const { return model != FieldModel::padic; }
  // Divisible value group and infinite residue field.
  bool satisfies_hypotheses() const { return model == FieldModel::puiseux; }

  std::string name() const;
  bool operator==(const FieldSpec&) const = default;
};

FieldSpec field_spec_from_name(std::string_view name);  // "padic:p", "laurent", "puiseux"

// Image of an element in the residue field A/M: an integer mod p for the
// p-adic model, an exact rational for the series models.
struct ResidueElement {
  bool modular = false;
  unsigned long p = 0;
  Int zval;  // in [0, p) when modular
  Rat qval;

  bool operator==(const ResidueElement&) const = default;
  std::string to_string() const;
};

// Exact field element. p-adic elements are plain rationals; series elements
// are finite exponent->coefficient maps plus an optional truncation order
// ("precision"): the element is known modulo terms of valuation >= prec.
// Absent prec means the element is exact. All stored exponents lie strictly
// below prec when prec is finite.
class FieldElement {
 public:
  using TermMap = std::map<Rat, Rat, RatLess>;

  FieldElement() = default;

  static FieldElement zero(const FieldSpec& spec);
  static FieldElement one(const FieldSpec& spec);
  static FieldElement from_rational(const FieldSpec& spec, const Rat& value);
  // coeff * t^expo (series models) or coeff * p^expo (padic; expo integer).
  static FieldElement monomial(const FieldSpec& spec, const Rat& coeff,
                               const Rat& expo);
  static FieldElement from_terms(const FieldSpec& spec, TermMap terms,
                                 std::optional<Rat> prec = std::nullopt);
  // Unknown element of valuation >= prec.
  static FieldElement big_oh(const FieldSpec& spec, const Rat& prec);

  const FieldSpec& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  const Rat& rational_value() const { return rat_; }
  const std::optional<Rat>& precision() const { return prec_; }

  // Literal zero (exact).
  bool is_exact_zero() const;
  bool is_exact() const { return !prec_.has_value(); }

  // Minimal exponent with nonzero coefficient; infinity for literal zero.
  // Throws ErrorKind::precision when undetermined at the current truncation.
  GroupValue valuation() const;
  Rat valuation_rat() const;  // finite valuation as a scalar

  ResidueElement residue() const;

  FieldElement add(const FieldElement& y) const;
  FieldElement sub(const FieldElement& y) const;
  FieldElement mul(const FieldElement& y) const;
  FieldElement negated() const;
  // Geometric-series inversion for series models; target_prec overrides the
  // default working precision (32 grid steps of relative precision).
  FieldElement inverse(std::optional<Rat> target_prec = std::nullopt) const;
  FieldElement pow(long n) const;  // n may be negative

  // Drop terms of exponent >= prec and record the truncation order.
  FieldElement truncated(const Rat& prec) const;

  // lcm of exponent denominators in play (the ramification index d).
  Int ramification_index() const;

  // Exact structural equality (same terms and same precision tag).
  bool identical_to(const FieldElement& y) const;
  // True when x - y is the exact zero.
  bool equals(const FieldElement& y) const;

  std::string to_string() const;

 private:
  FieldSpec spec_;
  Rat rat_;        // padic model
  TermMap terms_;  // series models
  std::optional<Rat> prec_;
};

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return a.add(b);
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return a.sub(b);
}
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return a.mul(b);
}
inline FieldElement operator-(const FieldElement& a) { return a.negated(); }

// k elements of the valuation ring with pairwise distinct residues:
// 0, 1, -1, 2, -2, ... for the series models, 0..p-1 for the p-adic model.
// Throws ErrorKind::exhausted_residues when k exceeds the residue field
// size; that error witnesses a finite residue field.
std::vector<FieldElement> residue_representatives(const FieldSpec& spec,
                                                  int k);

// Streaming form of the same sequence; index is 0-based.
FieldElement residue_representative(const FieldSpec& spec, int index);

// Canonical element of exact valuation gamma: p^gamma or t^gamma.
FieldElement element_with_valuation(const FieldSpec& spec,
                                    const GroupValue& gamma);

}  // namespace valivt
