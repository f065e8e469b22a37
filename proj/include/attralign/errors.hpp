#pragma once

#include <stdexcept>
#include <string>

namespace attralign {

// A vertex label outside the range of the graph it was used with.
class LabelOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A caller broke an operation precondition (mismatched sizes, removed center, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Probability at 0 or 1 where a threshold formula takes log(1/p).
class DegenerateParameter : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// Parameters outside the region an algorithm is defined on (e.g. np above the dense cap).
class InfeasibleParameter : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// Malformed edge-list, permutation or config text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace attralign
