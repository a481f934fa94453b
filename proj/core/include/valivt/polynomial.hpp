#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "valivt/field.hpp"

namespace valivt {

// Dense univariate polynomial over FieldElement, ascending degree order.
// Trailing exact-zero coefficients are trimmed.
class Polynomial {
 public:
  explicit Polynomial(FieldSpec spec) : spec_(std::move(spec)) {}
  Polynomial(FieldSpec spec, std::vector<FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  static Polynomial identity(const FieldSpec& spec);  // X
  // prod (X - root_i)
  static Polynomial from_roots(const FieldSpec& spec,
                               const std::vector<FieldElement>& roots);

  const FieldSpec& spec() const { return spec_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  FieldElement coeff(int i) const;  // zero outside [0, degree]
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }

  FieldElement evaluate(const FieldElement& x) const;  // Horner
  // f(w0 + X), exact repeated-Horner shift.
  Polynomial taylor_shift(const FieldElement& w0) const;

  Polynomial add(const Polynomial& g) const;
  Polynomial sub(const Polynomial& g) const;
  Polynomial mul(const Polynomial& g) const;
  Polynomial scaled(const FieldElement& c) const;
  // Division by a monic divisor; exact.
  std::pair<Polynomial, Polynomial> divmod_monic(const Polynomial& d) const;

  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();

  FieldSpec spec_;
  std::vector<FieldElement> coeffs_;
};

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return a.add(b);
}
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a.sub(b);
}
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return a.mul(b);
}

}  // namespace valivt
