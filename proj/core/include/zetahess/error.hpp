#pragma once

#include <stdexcept>
#include <string>

namespace zetahess {

/// Operands of different ambient dimension were combined.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A covector argument was identically zero.
class ZeroCovector : public std::invalid_argument {
 public:
  ZeroCovector() : std::invalid_argument("covector must be non-zero") {}
};

/// An index, dimension or degree lies outside the admissible range.
class ParameterOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Two independent evaluation routes disagreed. Always a bug or a
/// transcription error, never a user error.
class RouteMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A Gamma function argument hit a pole.
class GammaPole : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace zetahess
