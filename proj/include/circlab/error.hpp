#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circlab {

enum class ErrorCode {
  invalid_divisor,
  invalid_frame,
  invalid_connection_set,
  not_a_circulant,
  invalid_quotient,
  degree_mismatch,
  undefined_arc_transitivity,
  oracle_too_large,
  hypothesis_violation,
  not_a_unit,
  precondition,
  internal_consistency,
  guard_exceeded,
};

std::string_view to_string(ErrorCode code);

/// Recoverable failure of a library operation. The code identifies which
/// contract was broken; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Programming error, e.g. mixing residues of different moduli.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace circlab
