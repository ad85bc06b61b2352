#pragma once

#include <stdexcept>
#include <string>

namespace ssuf {

/// Malformed arguments: unknown arc ids, broken rotation lists, wrong lengths.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The instance violates a PSSUF invariant (see ValidationReport).
class InvalidInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The partition of a selection instance is interleaving.
class UnsupportedInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Path weights disagree with the terminal demands.
class DecompositionInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive oracle would exceed its state-space cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ssuf
