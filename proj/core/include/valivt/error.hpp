#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valivt {

// Error taxonomy shared by the whole library. The kinds map onto the CLI
// exit-code contract: hypothesis witnesses exit 2, precision exhaustion 3,
// everything else 4.
enum class ErrorKind {
  structural,
  divisibility,
  exhausted_residues,
  precision,
  group_mismatch,
  division_by_zero,
  undefined_form,
  negative_valuation,
  no_segment,
  hypothesis_violation,
  diverges_at,
  not_normalized,
  no_gap,
  invalid_counterexample,
  verification_failed,
  precondition,
  syntax,
};

const char* error_kind_name(ErrorKind k);
int error_exit_code(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failure with a byte offset into the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& expected,
              const std::string& msg)
      : Error(ErrorKind::syntax, msg + " at offset " + std::to_string(offset) +
                                     " (expected " + expected + ")"),
        offset_(offset),
        expected_(expected) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

}  // namespace valivt
