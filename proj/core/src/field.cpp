#include "valivt/field.hpp"

#include <algorithm>
#include <sstream>

namespace valivt {

FieldSpec FieldSpec::padic(unsigned long prime) {
  if (prime < 2) fail(ErrorKind::structural, "p must be a prime >= 2");
  return FieldSpec{FieldModel::padic, prime};
}

GroupSpec FieldSpec::group() const {
  return model == FieldModel::puiseux ? GroupSpec::rationals()
                                      : GroupSpec::integers();
}

std::string FieldSpec::name() const {
  switch (model) {
    case FieldModel::padic: return "padic:" + std::to_string(p);
    case FieldModel::laurent: return "laurent";
    case FieldModel::puiseux: return "puiseux";
  }
  return "?";
}

FieldSpec field_spec_from_name(std::string_view name) {
  if (name == "laurent") return FieldSpec::laurent();
  if (name == "puiseux") return FieldSpec::puiseux();
  if (name.rfind("padic", 0) == 0) {
    std::size_t colon = name.find(':');
    if (colon == std::string_view::npos)
      throw SyntaxError(name.size(), "':<prime>'", "padic model needs a prime");
    unsigned long p = std::stoul(std::string(name.substr(colon + 1)));
    return FieldSpec::padic(p);
  }
  throw SyntaxError(0, "padic:<p>|laurent|puiseux", "unknown field model");
}

std::string ResidueElement::to_string() const {
  return modular ? zval.get_str() : rat_to_string(qval);
}

static void check_same_spec(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) fail(ErrorKind::structural, "field spec mismatch");
}

FieldElement FieldElement::zero(const FieldSpec& spec) {
  FieldElement x;
  x.spec_ = spec;
  return x;
}

FieldElement FieldElement::one(const FieldSpec& spec) {
  return from_rational(spec, Rat(1));
}

FieldElement FieldElement::from_rational(const FieldSpec& spec,
                                         const Rat& value) {
  FieldElement x;
  x.spec_ = spec;
  if (spec.model == FieldModel::padic) {
    x.rat_ = value;
  } else if (sgn(value) != 0) {
    x.terms_.emplace(Rat(0), value);
  }
  return x;
}

FieldElement FieldElement::monomial(const FieldSpec& spec, const Rat& coeff,
                                    const Rat& expo) {
  FieldElement x;
  x.spec_ = spec;
  if (spec.model == FieldModel::padic) {
    if (!rat_is_integer(expo))
      fail(ErrorKind::group_mismatch, "p-adic exponent must be an integer");
    Rat pw(1);
    Int pz(spec.p);
    long e = expo.get_num().get_si();
    Int pabs;
    mpz_pow_ui(pabs.get_mpz_t(), pz.get_mpz_t(),
               static_cast<unsigned long>(e < 0 ? -e : e));
    pw = e < 0 ? Rat(1) / Rat(pabs) : Rat(pabs);
    x.rat_ = coeff * pw;
    return x;
  }
  if (spec.model == FieldModel::laurent && !rat_is_integer(expo))
    fail(ErrorKind::group_mismatch, "Laurent exponent must be an integer");
  if (sgn(coeff) != 0) x.terms_.emplace(expo, coeff);
  return x;
}

FieldElement FieldElement::from_terms(const FieldSpec& spec, TermMap terms,
                                      std::optional<Rat> prec) {
  if (spec.model == FieldModel::padic)
    fail(ErrorKind::structural, "term map on p-adic model");
  FieldElement x;
  x.spec_ = spec;
  x.terms_ = std::move(terms);
  x.prec_ = std::move(prec);
  for (auto it = x.terms_.begin(); it != x.terms_.end();) {
    bool drop = sgn(it->second) == 0 ||
                (x.prec_ && cmp(it->first, *x.prec_) >= 0);
    if (spec.model == FieldModel::laurent && !rat_is_integer(it->first))
      fail(ErrorKind::group_mismatch, "Laurent exponent must be an integer");
    it = drop ? x.terms_.erase(it) : std::next(it);
  }
  return x;
}

FieldElement FieldElement::big_oh(const FieldSpec& spec, const Rat& prec) {
  return from_terms(spec, {}, prec);
}

bool FieldElement::is_exact_zero() const {
  if (spec_.model == FieldModel::padic) return sgn(rat_) == 0;
  return terms_.empty() && !prec_;
}

GroupValue FieldElement::valuation() const {
  if (spec_.model == FieldModel::padic) {
    if (sgn(rat_) == 0) return GroupValue::infinity();
    return GroupValue(Rat(padic_valuation(rat_, spec_.p)));
  }
  if (terms_.empty()) {
    if (prec_)
      fail(ErrorKind::precision,
           "valuation undetermined below O(t^" + rat_to_string(*prec_) + ")");
    return GroupValue::infinity();
  }
  return GroupValue(terms_.begin()->first);
}

Rat FieldElement::valuation_rat() const {
  GroupValue v = valuation();
  if (v.is_infinity())
    fail(ErrorKind::precondition, "finite valuation required");
  return v.scalar();
}

ResidueElement FieldElement::residue() const {
  ResidueElement r;
  if (spec_.model == FieldModel::padic) {
    r.modular = true;
    r.p = spec_.p;
    if (sgn(rat_) == 0) return r;
    if (padic_valuation(rat_, spec_.p) < 0)
      fail(ErrorKind::negative_valuation, "residue needs valuation >= 0");
    Int pz(spec_.p), dinv;
    if (mpz_invert(dinv.get_mpz_t(), rat_.get_den_mpz_t(), pz.get_mpz_t()) == 0)
      fail(ErrorKind::structural, "denominator not invertible mod p");
    r.zval = (rat_.get_num() % pz) * dinv % pz;
    if (r.zval < 0) r.zval += pz;
    return r;
  }
  if (!terms_.empty() && cmp(terms_.begin()->first, Rat(0)) < 0)
    fail(ErrorKind::negative_valuation, "residue needs valuation >= 0");
  if (prec_ && cmp(*prec_, Rat(0)) <= 0)
    fail(ErrorKind::precision, "residue undetermined at this truncation");
  auto it = terms_.find(Rat(0));
  r.qval = it == terms_.end() ? Rat(0) : it->second;
  return r;
}

static std::optional<Rat> min_prec(const std::optional<Rat>& a,
                                   const std::optional<Rat>& b) {
  if (!a) return b;
  if (!b) return a;
  return cmp(*a, *b) <= 0 ? a : b;
}

FieldElement FieldElement::add(const FieldElement& y) const {
  check_same_spec(spec_, y.spec_);
  if (spec_.model == FieldModel::padic) {
    FieldElement r;
    r.spec_ = spec_;
    r.rat_ = rat_ + y.rat_;
    return r;
  }
  TermMap t = terms_;
  for (const auto& [e, c] : y.terms_) {
    auto [it, inserted] = t.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) t.erase(it);
    }
  }
  return from_terms(spec_, std::move(t), min_prec(prec_, y.prec_));
}

FieldElement FieldElement::negated() const {
  if (spec_.model == FieldModel::padic) {
    FieldElement r;
    r.spec_ = spec_;
    r.rat_ = -rat_;
    return r;
  }
  TermMap t = terms_;
  for (auto& [e, c] : t) c = -c;
  return from_terms(spec_, std::move(t), prec_);
}

FieldElement FieldElement::sub(const FieldElement& y) const {
  return add(y.negated());
}

FieldElement FieldElement::mul(const FieldElement& y) const {
  check_same_spec(spec_, y.spec_);
  if (spec_.model == FieldModel::padic) {
    FieldElement r;
    r.spec_ = spec_;
    r.rat_ = rat_ * y.rat_;
    return r;
  }
  // 0 * anything is exactly 0, whatever the other factor's truncation.
  if (is_exact_zero() || y.is_exact_zero()) return zero(spec_);
  // Lower bound for an operand's valuation: min exponent, or the truncation
  // order when no term is visible.
  auto vmin = [](const FieldElement& x) -> Rat {
    return x.terms_.empty() ? *x.prec_ : x.terms_.begin()->first;
  };
  std::optional<Rat> prec;
  if (prec_) prec = min_prec(prec, Rat(*prec_ + vmin(y)));
  if (y.prec_) prec = min_prec(prec, Rat(*y.prec_ + vmin(*this)));
  TermMap t;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : y.terms_) {
      Rat e = e1 + e2;
      if (prec && cmp(e, *prec) >= 0) continue;
      auto [it, inserted] = t.emplace(e, c1 * c2);
      if (!inserted) it->second += c1 * c2;
    }
  return from_terms(spec_, std::move(t), prec);
}

Int FieldElement::ramification_index() const {
  Int d(1);
  for (const auto& [e, c] : terms_) lcm_denominator(d, e);
  if (prec_) lcm_denominator(d, *prec_);
  return d;
}

FieldElement FieldElement::inverse(std::optional<Rat> target_prec) const {
  if (spec_.model == FieldModel::padic) {
    if (sgn(rat_) == 0)
      fail(ErrorKind::division_by_zero, "inverse of zero");
    FieldElement r;
    r.spec_ = spec_;
    r.rat_ = 1 / rat_;
    return r;
  }
  if (terms_.empty()) {
    if (prec_) fail(ErrorKind::precision, "inverse of undetermined element");
    fail(ErrorKind::division_by_zero, "inverse of zero");
  }
  const Rat e = terms_.begin()->first;
  const Rat c = terms_.begin()->second;
  FieldElement lead = monomial(spec_, c, e);
  FieldElement lead_inv = monomial(spec_, Rat(1) / c, -e);
  if (terms_.size() == 1 && !prec_) return lead_inv;  // exact monomial

  // x = c t^e (1 + u), v(u) > 0: invert the unit by a geometric series up
  // to relative precision rel.
  Rat rel;
  if (target_prec) {
    rel = *target_prec + e;  // requested absolute precision for 1/x
  } else if (prec_) {
    rel = *prec_ - e;
  } else {
    Int d = ramification_index();
    rel = Rat(32) / Rat(d);
  }
  if (cmp(rel, Rat(0)) <= 0)
    fail(ErrorKind::precision, "no relative precision left for inversion");
  FieldElement u = mul(lead_inv).sub(one(spec_)).truncated(rel);
  FieldElement acc = one(spec_);
  FieldElement pw = one(spec_);
  if (!u.is_exact_zero()) {
    Rat vu = u.valuation_rat();
    for (Rat reached(0); cmp(reached, rel) < 0; reached += vu) {
      pw = pw.mul(u.negated()).truncated(rel);
      acc = acc.add(pw);
      if (pw.is_exact_zero()) break;
    }
  }
  return acc.mul(lead_inv).truncated(rel - e);
}

FieldElement FieldElement::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  FieldElement r = one(spec_);
  FieldElement base = *this;
  unsigned long k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1) r = r.mul(base);
    base = k > 1 ? base.mul(base) : base;
    k >>= 1;
  }
  return r;
}

FieldElement FieldElement::truncated(const Rat& prec) const {
  if (spec_.model == FieldModel::padic)
    fail(ErrorKind::structural, "truncation on p-adic model");
  TermMap t;
  for (const auto& [e, c] : terms_)
    if (cmp(e, prec) < 0) t.emplace(e, c);
  return from_terms(spec_, std::move(t), min_prec(prec_, prec));
}

bool FieldElement::identical_to(const FieldElement& y) const {
  if (!(spec_ == y.spec_)) return false;
  if (spec_.model == FieldModel::padic) return rat_ == y.rat_;
  if (prec_.has_value() != y.prec_.has_value()) return false;
  if (prec_ && cmp(*prec_, *y.prec_) != 0) return false;
  return terms_ == y.terms_;
}

bool FieldElement::equals(const FieldElement& y) const {
  return sub(y).is_exact_zero();
}

std::string FieldElement::to_string() const {
  if (spec_.model == FieldModel::padic) return rat_to_string(rat_);
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat ca = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    bool unit_coeff = cmp(ca, Rat(1)) == 0;
    if (cmp(e, Rat(0)) == 0) {
      os << rat_to_string(ca);
    } else {
      if (!unit_coeff) os << rat_to_string(ca) << "*";
      os << "t";
      if (cmp(e, Rat(1)) != 0) {
        if (rat_is_integer(e) && sgn(e) > 0)
          os << "^" << rat_to_string(e);
        else
          os << "^(" << rat_to_string(e) << ")";
      }
    }
  }
  if (prec_) {
    if (!first) os << " + ";
    os << "O(t";
    if (cmp(*prec_, Rat(1)) != 0) {
      if (rat_is_integer(*prec_) && sgn(*prec_) > 0)
        os << "^" << rat_to_string(*prec_);
      else
        os << "^(" << rat_to_string(*prec_) << ")";
    }
    os << ")";
  } else if (first) {
    os << "0";
  }
  return os.str();
}

FieldElement residue_representative(const FieldSpec& spec, int index) {
  if (index < 0) fail(ErrorKind::precondition, "negative representative index");
  if (spec.model == FieldModel::padic) {
    if (static_cast<unsigned long>(index) >= spec.p)
      fail(ErrorKind::exhausted_residues,
           "residue field has only " + std::to_string(spec.p) + " elements");
    return FieldElement::from_rational(spec, Rat(index));
  }
  // 0, 1, -1, 2, -2, ...
  long k = (index + 1) / 2;
  return FieldElement::from_rational(spec, Rat(index % 2 ? k : -k));
}

std::vector<FieldElement> residue_representatives(const FieldSpec& spec,
                                                  int k) {
  if (k < 1) fail(ErrorKind::precondition, "k must be >= 1");
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.push_back(residue_representative(spec, i));
  return out;
}

FieldElement element_with_valuation(const FieldSpec& spec,
                                    const GroupValue& gamma) {
  if (gamma.is_infinity())
    fail(ErrorKind::precondition, "finite valuation required");
  if (gamma.rank() != 1)
    fail(ErrorKind::group_mismatch, "field models have rank-1 value groups");
  const Rat& g = gamma.scalar();
  if (spec.model != FieldModel::puiseux && !rat_is_integer(g))
    fail(ErrorKind::group_mismatch,
         gamma.to_string() + " is not in the Z value group");
  return FieldElement::monomial(spec, Rat(1), g);
}

}  // namespace valivt
