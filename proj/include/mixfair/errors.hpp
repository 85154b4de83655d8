#pragma once

#include <stdexcept>
#include <string>

namespace mixfair {

// Bad input: malformed JSON, schema violations, invalid flag values.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A well-formed request whose answer is "no such allocation/flow exists".
struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// The exact solver cannot handle this shape (mixed, non-identical divisible).
struct HardInstanceError : std::runtime_error {
  explicit HardInstanceError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration would exceed the configured caps.
struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mixfair
