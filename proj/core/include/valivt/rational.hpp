#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace valivt {

// Exact rationals everywhere; no floating point in the library.
using Rat = mpq_class;
using Int = mpz_class;

// Strict weak order usable as a map comparator.
struct RatLess {
  bool operator()(const Rat& a, const Rat& b) const { return cmp(a, b) < 0; }
};

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// p-adic valuation of a nonzero rational.
long padic_valuation(const Rat& x, unsigned long p);

// "p/q" or "p"; always in lowest terms.
std::string rat_to_string(const Rat& r);

// Accepts optional sign, "p" or "p/q". Throws SyntaxError.
Rat rat_from_string(std::string_view s);

// lcm of a denominator into an accumulator.
void lcm_denominator(Int& acc, const Rat& r);

}  // namespace valivt
