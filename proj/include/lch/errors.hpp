#pragma once

#include <stdexcept>
#include <string>

namespace lch {

/// Invalid input: malformed files, undeclared names, violated preconditions.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction failed (A-infinity relations,
/// retract identities, d^2 = 0 of a derived complex).
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lch
