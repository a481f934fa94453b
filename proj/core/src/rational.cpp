#include "valivt/rational.hpp"

#include <cctype>

#include "valivt/error.hpp"

namespace valivt {

long padic_valuation(const Rat& x, unsigned long p) {
  if (sgn(x) == 0) fail(ErrorKind::structural, "p-adic valuation of zero");
  mpz_class pz(p), tmp;
  long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_num_mpz_t(),
                                         pz.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_den_mpz_t(),
                                         pz.get_mpz_t()));
  return vn - vd;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(std::string_view s) {
  std::size_t i = 0;
  auto expect_digits = [&](std::size_t from) {
    if (from >= s.size() || !std::isdigit(static_cast<unsigned char>(s[from])))
      throw SyntaxError(from, "digit", "malformed rational");
  };
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  expect_digits(i);
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i < s.size() && s[i] == '/') {
    expect_digits(i + 1);
    std::size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    i = j;
  }
  if (i != s.size())
    throw SyntaxError(i, "end of rational", "trailing characters");
  Rat r;
  if (r.set_str(std::string(s), 10) != 0)
    throw SyntaxError(0, "rational", "malformed rational");
  r.canonicalize();
  return r;
}

void lcm_denominator(Int& acc, const Rat& r) {
  mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), r.get_den_mpz_t());
}

}  // namespace valivt
