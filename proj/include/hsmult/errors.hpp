#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsmult {

// Base class for all errors raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid user input: syntax errors, invariant violations, ideals that are
// not zero-dimensional, mismatched ambients, and so on.
struct input_error : error {
  using error::error;
};

// Parse failure in the polynomial grammar; carries the byte offset of the
// first offending character.
struct parse_error : input_error {
  parse_error(const std::string& what, std::size_t offset)
      : input_error(what + " (byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

// A configured resource budget was exhausted (pair reductions, sample range,
// truncation order, generated product generators) before an answer was
// certain. Never carries a value.
struct budget_error : error {
  using error::error;
};

// An internal consistency check failed. Indicates a bug, not bad input.
struct internal_error : error {
  using error::error;
};

inline void check_internal(bool ok, const std::string& what) {
  if (!ok) throw internal_error(what);
}

}  // namespace hsmult
