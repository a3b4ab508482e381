#pragma once

#include <stdexcept>

namespace tightcount {

// Base class for all failures reported by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally invalid input: bad rational syntax, a zero denominator, an
// integral surgery coefficient, or a coefficient list that hits a pole
// during continued-fraction evaluation.
struct invalid_input_error : error {
  using error::error;
};

// An operation was called outside its precondition (nonnegative input to the
// expansion, nonpositive filling slope, missing second block, ...).
struct domain_error : error {
  using error::error;
};

// e0 < 0: the classification implemented here covers e0 >= 0 only.
struct out_of_scope_error : error {
  using error::error;
};

// An enumeration would exceed the configured assignment cap.
struct enumeration_cap_error : error {
  using error::error;
};

}  // namespace tightcount
