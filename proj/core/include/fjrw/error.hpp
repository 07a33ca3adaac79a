#pragma once

#include <stdexcept>
#include <string>

namespace fjrw {

enum class errc {
  syntax_error,          // malformed polynomial text
  not_invertible,        // well-formed but not a two-variable invertible shape
  degenerate,            // exponent below the minimum for its shape
  non_positive_weights,  // weight solve produced a non-positive or non-reduced system
  dual_out_of_range,     // internal invariant violation in the dual index map
  degree_overflow,       // tautological product beyond degree 2
  degree_mismatch,       // integrand degree does not match the moduli dimension
  not_concave,           // some pushforward bundle has sections
  unsupported_arity,     // correlators outside 3..5 points
  unsupported_order,     // Bernoulli/Chern order outside the implemented range
  index_not_narrow,
  index_out_of_range,
  weight_half,           // weight-1/2 variable: evaluation refused, verdict via small-charge table
  unsupported,           // other precondition failures (wrong type, charge too small, ...)
  pipeline_mismatch,     // geometric evaluation disagrees with a closed form
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
  errc code;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

/// Process exit code for CLI adapters: 2 = parse error, 3 = unsupported
/// evaluation, 4 = internal invariant violation.
inline int exit_code(errc c) {
  switch (c) {
    case errc::syntax_error:
    case errc::not_invertible:
    case errc::degenerate:
    case errc::non_positive_weights:
      return 2;
    case errc::pipeline_mismatch:
    case errc::dual_out_of_range:
    case errc::internal:
      return 4;
    default:
      return 3;
  }
}

}  // namespace fjrw
