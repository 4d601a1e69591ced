#pragma once

#include <stdexcept>
#include <string>

namespace pburgers {

// Malformed input: dimension or grid mismatch, invalid parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operator (e.g. s < 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace pburgers
