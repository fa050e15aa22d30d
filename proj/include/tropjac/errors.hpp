#pragma once

#include <stdexcept>

namespace tropjac {

// Bad user input or a violated precondition. CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A statement that is a theorem failed to hold at runtime; signals an
// implementation bug, never bad input. CLI maps this to exit code 3.
struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace tropjac
