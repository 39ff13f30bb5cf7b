#pragma once

#include <stdexcept>
#include <string>

namespace ffmono {

// Base class for all library failures that are not plain precondition
// violations (those throw std::invalid_argument / std::range_error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested evaluation left the region where the construction is
// certified (polydisk exit, near-singular Moser matrix, connection pole).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure failed to converge or produced unusable data.
class NumericalError : public Error {
 public:
  enum class Kind {
    step_limit,       // integrator ran out of steps
    blow_up,          // non-finite state during integration
    step_underflow,   // step size collapsed below representable increments
    no_crossing,      // event (section crossing) never bracketed
    unwrap_ambiguity, // consecutive phase jump too large to unwrap safely
    not_stabilized,   // asymptote estimate still drifting at the horizon
    inconsistent,     // internal cross-check failed (winding vs. phase span)
    domain_exit,      // a sweep sample left the certified domain
  };

  NumericalError(Kind k, const std::string& msg, int sample_index = -1)
      : Error(msg), kind(k), sample_index(sample_index) {}

  Kind kind;
  // Index of the offending sample in a sweep, -1 when not applicable.
  int sample_index;
};

}  // namespace ffmono
