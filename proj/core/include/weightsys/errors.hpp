#pragma once

#include <stdexcept>

namespace weightsys {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A request exceeded a configured size bound.
class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace weightsys
