#pragma once

#include <stdexcept>
#include <string>

namespace spincorr {

/// Argument outside the mathematical domain of an operation (e.g. T <= 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input matrix violates density-matrix invariants beyond tolerance.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed sweep/grid specification or violated caller precondition.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A temperature curve cannot be assigned a behavior type.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent evaluation routes disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace spincorr
