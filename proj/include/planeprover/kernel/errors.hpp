#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace planeprover {

// Every failure raised by the prover carries one of these codes so callers
// (the CLI, the oracle's resampling loop) can branch without parsing text.
enum class Errc {
  malformed_scalar,
  division_by_zero,
  unsupported_radical_division,
  not_polynomial,
  nonlinear_system,
  shape,
  not_divisible,
  evaluation_pole,
  resource,
  timeout,
  degenerate_intersection,
  no_common_point,
  degenerate_circle,
  not_incident,
  unsupported_orientation,
  internal_inconsistency,
  pole,
  not_found,
  unable_to_sample,
  syntax,
  unknown_primitive,
  arity,
  use_before_declaration,
  type,
  invalid_argument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace planeprover
