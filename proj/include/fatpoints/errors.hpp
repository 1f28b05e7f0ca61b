#pragma once

#include <stdexcept>
#include <string>

namespace fatpoints {

/// Precondition violations on otherwise well-formed input (bad prime, t > n, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidPoint : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class CannotSample : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hyperplanes that do not meet properly.
class ImproperConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientGenerators : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VariableMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace fatpoints
