#pragma once

#include <stdexcept>
#include <string>

namespace gridgames {

/// An action that the rules of the game do not allow (budget exceeded, wrong
/// mover, oversized declaration, ...).
class RuleViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A strategy or solver was asked to run outside the parameter domain on
/// which it is defined.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search would exceed its configured enumeration cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gridgames
