#pragma once

#include <stdexcept>
#include <string>

namespace corrterms {

// Raised when a caller violates a documented precondition (bad prime, index
// out of range, malformed knot spec, ...).  The CLI maps this to exit code 2.
class invalid_input : public std::invalid_argument {
 public:
  explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an internal consistency check fails (a structural property the
// library guarantees did not hold).  The CLI maps this to exit code 3.
class invariant_error : public std::logic_error {
 public:
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace corrterms
