#include "valivt/error.hpp"

namespace valivt {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::structural: return "StructuralError";
    case ErrorKind::divisibility: return "DivisibilityError";
    case ErrorKind::exhausted_residues: return "ExhaustedResidues";
    case ErrorKind::precision: return "PrecisionError";
    case ErrorKind::group_mismatch: return "GroupMismatch";
    case ErrorKind::division_by_zero: return "DivisionByZero";
    case ErrorKind::undefined_form: return "UndefinedForm";
    case ErrorKind::negative_valuation: return "NegativeValuation";
    case ErrorKind::no_segment: return "NoSegment";
    case ErrorKind::hypothesis_violation: return "HypothesisViolation";
    case ErrorKind::diverges_at: return "DivergesAt";
    case ErrorKind::not_normalized: return "NotNormalized";
    case ErrorKind::no_gap: return "NoGap";
    case ErrorKind::invalid_counterexample: return "InvalidCounterexample";
    case ErrorKind::verification_failed: return "VerificationFailed";
    case ErrorKind::precondition: return "PreconditionViolation";
    case ErrorKind::syntax: return "SyntaxError";
  }
  return "UnknownError";
}

int error_exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::divisibility:
    case ErrorKind::exhausted_residues:
      return 2;  // hypothesis witness
    case ErrorKind::precision:
      return 3;
    default:
      return 4;
  }
}

}  // namespace valivt
