#pragma once

#include <stdexcept>
#include <string>

namespace clift {

/// Argument outside the open domain of a lifting map (e.g. |x| too close to 1).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix that must be invertible is singular to working precision.
class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state left the open safe box (or started outside it).
class OutOfSafeSet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation called with incompatible vector/matrix dimensions.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid scenario file or command-line configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace clift
