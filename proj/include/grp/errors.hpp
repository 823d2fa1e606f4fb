#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grp {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A coset enumeration ran out of its coset budget.
class OverflowError : public Error {
 public:
  explicit OverflowError(std::size_t limit)
      : Error("coset enumeration exceeded the budget of " +
              std::to_string(limit) + " cosets"),
        limit_(limit) {}

  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

// Syntax error while reading a presentation or a Gauss code; `position` is a
// byte offset into the input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace grp
