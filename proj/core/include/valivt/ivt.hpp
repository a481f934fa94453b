#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valivt/tropical.hpp"

namespace valivt {

// Find c with v(f(c)) = alpha and v(c) between v(a) and v(b), given that
// alpha lies strictly between v(f(a)) and v(f(b)).
struct IVTQuery {
  Polynomial f;
  FieldElement a;
  FieldElement b;
  GroupValue alpha;
};

enum class IVTCase { segment_inversion, breakpoint_shift };

const char* ivt_case_name(IVTCase c);

// Affine segment phi(gamma) = intercept + slope*gamma that was inverted.
struct SegmentInfo {
  GroupValue intercept;
  long slope = 0;
};

struct IVTSolution {
  FieldElement c;
  GroupValue vc;
  GroupValue achieved;  // equals alpha exactly
  IVTCase kase = IVTCase::segment_inversion;
  std::optional<SegmentInfo> segment;      // case 1, off breakpoints
  std::optional<FieldElement> shift_point;  // case 2
  int retries = 0;
};

// Solve phi_f(eta) = alpha for eta; range is a closed interval (nullopt
// bound = unbounded side). At a breakpoint tie the breakpoint itself is
// returned. Throws ErrorKind::no_segment when alpha is out of reach,
// ErrorKind::divisibility when the affine inversion leaves the group.
GroupValue solve_segment(const Polynomial& f, const GroupValue& alpha,
                         std::optional<GroupValue> lo,
                         std::optional<GroupValue> hi,
                         SegmentInfo* seg = nullptr);

// Breakpoint construction: w with v(w) = v(w0) and v(f(w)) = alpha, for
// phi_f(v(w0)) <= alpha < v(f(w0)). Implemented via the Taylor shift
// g(X) = f(w0 + X), whose polygon slopes are the v(w0 - z_i), plus a
// residue-guided retry.
FieldElement realize_intermediate(const Polynomial& f, const FieldElement& w0,
                                  const GroupValue& alpha,
                                  const FieldSpec& spec, int* retries = nullptr,
                                  GroupValue* gamma_out = nullptr);

IVTSolution ivt_solve(const IVTQuery& q);

// k distinct solutions obtained from distinct residue choices.
std::vector<IVTSolution> ivt_enumerate(const IVTQuery& q, int k);

}  // namespace valivt
