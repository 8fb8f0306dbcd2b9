#pragma once

#include <stdexcept>

namespace tridend {

/// Raised when a tree, vector or expression literal cannot be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for operations the algebra leaves undefined, such as `| ≺ |`.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace tridend
