#pragma once

#include <string>
#include <vector>

#include "valivt/field.hpp"

namespace valivt {

struct CheckRecord {
  std::string input;
  std::string expected;
  std::string observed;
  bool pass = false;
};

// Executable verification that one of the two IVT hypotheses is necessary.
struct CounterexampleReport {
  FieldSpec model;
  std::string construction;
  std::vector<CheckRecord> checks;
  bool ivt_fails_as_predicted = false;  // true iff all checks pass
  std::string note;
};

// Finite residue field: P(X) = prod (X - z_i) over a full residue system
// mod p separates v(P(x)) away from 0 on both sides, so no c in the
// interval attains v(P(c)) = 0. The predicate checked for v(x) >= 0 is
// v(P(x)) > 0; the report notes the convention.
CounterexampleReport finite_residue_counterexample(
    unsigned long p, const std::vector<long>& sample_grid);

// Non-divisible group: P(X) = X^n over the Laurent model with n not
// dividing h; divide_exact fails, so no c has v(c^n) = h.
CounterexampleReport divisibility_counterexample(long n, long h);

// Example of a continuous (locally constant) function violating IVT:
// f = k on M, k^{-1} off M; the attained valuation set is {v(k), -v(k)}.
CounterexampleReport locally_constant_ivt_failure(const FieldSpec& spec,
                                                  const FieldElement& k);

}  // namespace valivt
