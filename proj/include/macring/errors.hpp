#pragma once

#include <stdexcept>

namespace macring {

// Bad user input (malformed JSON, out-of-range vertices, ...).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal invariant; never the caller's fault.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace macring
