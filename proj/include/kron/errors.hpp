#ifndef KRON_ERRORS_HPP_
#define KRON_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace kron {

// Invalid model or experiment parameters (out-of-range probabilities,
// violated R-MAT constraint, alpha != gamma where required, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Vertices or labels of incompatible digit counts were combined.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request exceeds a desk-scale budget. The message names the remedy.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A pattern or operation the model does not support (e.g. disconnected
// patterns for edge-labeling enumeration).
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed edge-list or pattern input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kron

#endif  // KRON_ERRORS_HPP_
