#pragma once

#include <stdexcept>
#include <string>

namespace einf {

// Bad user input: malformed text, biarity mismatch, invalid graph, etc.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Something that must never happen if the algorithms are right.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace einf
