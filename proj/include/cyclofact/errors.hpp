#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclofact {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input: out-of-domain parameters, malformed tables, non-normal
// subgroups where a normal one is required, and the like.
struct ValidationError : Error {
  using Error::Error;
};

// A configured limit was exceeded (group order, subgroup budget).
struct CapacityError : Error {
  using Error::Error;
};

// The library contradicted itself: an identity that must hold exactly came
// out wrong. Always a bug, never a caller mistake.
struct ConsistencyError : Error {
  using Error::Error;
};

// Group spec string could not be parsed. Carries the byte offset of the
// failure and a human-readable description of what was expected there.
struct ParseError : Error {
  std::size_t position;
  std::string expected;

  ParseError(std::size_t pos, std::string what_was_expected)
      : Error("parse error at position " + std::to_string(pos) +
              ": expected " + what_was_expected),
        position(pos),
        expected(std::move(what_was_expected)) {}
};

// Filesystem trouble while writing CLI output.
struct IoError : Error {
  using Error::Error;
};

}  // namespace cyclofact
