#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phk {

/// Operands built over different ambient algebras, out-of-range variable
/// indices, or malformed domain data.
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation that presupposes a verified Poisson bracket was handed one
/// that has not passed the Jacobi check.
class UnverifiedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Required grading data is missing or has the wrong shape for the request.
class GradingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text could not be parsed. `position()` is a 0-based byte offset into the
/// input that was being parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A JSON input file is unreadable or violates the file schema.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace phk
