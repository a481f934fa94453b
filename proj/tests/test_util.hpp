#pragma once

#include "valivt/rational.hpp"

// mpq_class(n, d) does not canonicalize; every fraction built from random
// draws goes through here so comparisons and term maps behave.
inline valivt::Rat frac(long n, long d) {
  valivt::Rat r(n, d);
  r.canonicalize();
  return r;
}
