#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace l1kit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed Newick / eNewick text. `position()` is the byte offset where
// the parser gave up.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A value violates an operation's precondition (mismatched leaf sets,
// unknown taxa, a network that is not level-1, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Refusal to enumerate 2^k objects beyond the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed. Seeing one of these means a bug, not bad
// input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace l1kit
