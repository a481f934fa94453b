#include "valivt/polynomial.hpp"

#include <sstream>

namespace valivt {

Polynomial::Polynomial(FieldSpec spec, std::vector<FieldElement> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_exact_zero())
    coeffs_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement& c) {
  return Polynomial(c.spec(), {c});
}

Polynomial Polynomial::identity(const FieldSpec& spec) {
  return Polynomial(spec, {FieldElement::zero(spec), FieldElement::one(spec)});
}

Polynomial Polynomial::from_roots(const FieldSpec& spec,
                                  const std::vector<FieldElement>& roots) {
  Polynomial f(spec, {FieldElement::one(spec)});
  for (const FieldElement& r : roots) {
    Polynomial lin(spec, {r.negated(), FieldElement::one(spec)});
    f = f.mul(lin);
  }
  return f;
}

FieldElement Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return FieldElement::zero(spec_);
  return coeffs_[static_cast<std::size_t>(i)];
}

FieldElement Polynomial::evaluate(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(spec_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc.mul(x).add(*it);
  return acc;
}

Polynomial Polynomial::taylor_shift(const FieldElement& w0) const {
  std::vector<FieldElement> c = coeffs_;
  const int n = degree();
  for (int k = 0; k < n; ++k)
    for (int j = n - 1; j >= k; --j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)].add(
          w0.mul(c[static_cast<std::size_t>(j + 1)]));
  return Polynomial(spec_, std::move(c));
}

Polynomial Polynomial::add(const Polynomial& g) const {
  std::vector<FieldElement> c(std::max(coeffs_.size(), g.coeffs_.size()),
                              FieldElement::zero(spec_));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < coeffs_.size()) c[i] = c[i].add(coeffs_[i]);
    if (i < g.coeffs_.size()) c[i] = c[i].add(g.coeffs_[i]);
  }
  return Polynomial(spec_, std::move(c));
}

Polynomial Polynomial::sub(const Polynomial& g) const {
  return add(g.scaled(FieldElement::from_rational(spec_, Rat(-1))));
}

Polynomial Polynomial::mul(const Polynomial& g) const {
  if (is_zero() || g.is_zero()) return Polynomial(spec_);
  std::vector<FieldElement> c(coeffs_.size() + g.coeffs_.size() - 1,
                              FieldElement::zero(spec_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
      c[i + j] = c[i + j].add(coeffs_[i].mul(g.coeffs_[j]));
  return Polynomial(spec_, std::move(c));
}

Polynomial Polynomial::scaled(const FieldElement& s) const {
  std::vector<FieldElement> c = coeffs_;
  for (FieldElement& x : c) x = x.mul(s);
  return Polynomial(spec_, std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod_monic(
    const Polynomial& d) const {
  const int dd = d.degree();
  if (dd < 0) fail(ErrorKind::division_by_zero, "division by zero polynomial");
  if (!d.coeff(dd).equals(FieldElement::one(spec_)))
    fail(ErrorKind::precondition, "divisor must be monic");
  std::vector<FieldElement> rem = coeffs_;
  std::vector<FieldElement> quo(
      rem.size() > static_cast<std::size_t>(dd)
          ? rem.size() - static_cast<std::size_t>(dd)
          : 0,
      FieldElement::zero(spec_));
  for (int i = degree(); i >= dd; --i) {
    FieldElement q = rem[static_cast<std::size_t>(i)];
    if (q.is_exact_zero()) continue;
    quo[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] =
          rem[static_cast<std::size_t>(i - dd + j)].sub(q.mul(d.coeff(j)));
  }
  rem.resize(static_cast<std::size_t>(dd > 0 ? dd : 0),
             FieldElement::zero(spec_));
  return {Polynomial(spec_, std::move(quo)), Polynomial(spec_, std::move(rem))};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const FieldElement& c = coeff(i);
    if (c.is_exact_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << "(" << c.to_string() << ")";
      continue;
    }
    if (!c.equals(FieldElement::one(spec_)))
      os << "(" << c.to_string() << ")*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace valivt
