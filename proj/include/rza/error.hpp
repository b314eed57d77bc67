#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rza {

/// Malformed input: unparsable text, unknown variable, bad JSON shape.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in the polynomial grammar, with the byte offset where parsing stopped.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A documented precondition of an operation does not hold for the given arguments.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant or size guard tripped.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rza
