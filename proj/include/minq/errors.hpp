#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace minq {

/// Base class for all domain errors. `kind()` is a stable machine-readable
/// tag used by the CLI's structured error output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

class DuplicateValueError : public Error {
 public:
  explicit DuplicateValueError(std::uint64_t value)
      : Error("DuplicateValue", "duplicate dataset value " + std::to_string(value)),
        value_(value) {}
  std::uint64_t value() const noexcept { return value_; }

 private:
  std::uint64_t value_;
};

class ValueOutOfRangeError : public Error {
 public:
  ValueOutOfRangeError(std::uint64_t value, int n_qubits)
      : Error("ValueOutOfRange", "value " + std::to_string(value) +
                                     " does not fit in " + std::to_string(n_qubits) +
                                     " code bits"),
        value_(value) {}
  std::uint64_t value() const noexcept { return value_; }

 private:
  std::uint64_t value_;
};

class EmptyDatasetError : public Error {
 public:
  EmptyDatasetError() : Error("EmptyDataset", "dataset contains no values") {}
};

class QubitLimitExceededError : public Error {
 public:
  QubitLimitExceededError(int requested, int limit)
      : Error("QubitLimitExceeded", std::to_string(requested) +
                                        " qubits exceeds the engine limit of " +
                                        std::to_string(limit)) {}
};

class DimensionMismatchError : public Error {
 public:
  explicit DimensionMismatchError(const std::string& message)
      : Error("DimensionMismatch", message) {}
};

class InvalidCountsError : public Error {
 public:
  explicit InvalidCountsError(const std::string& message)
      : Error("InvalidCounts", message) {}
};

class PhaseDomainError : public Error {
 public:
  explicit PhaseDomainError(double argument)
      : Error("PhaseDomainError",
              "phase-matching argument " + std::to_string(argument) + " exceeds 1") {}
};

class ThresholdOutOfRangeError : public Error {
 public:
  ThresholdOutOfRangeError(std::uint64_t threshold, int n_qubits)
      : Error("ThresholdOutOfRange", "threshold " + std::to_string(threshold) +
                                         " out of range for " + std::to_string(n_qubits) +
                                         " qubits") {}
};

class ThresholdIsFullRangeError : public Error {
 public:
  ThresholdIsFullRangeError(std::uint64_t threshold, int n_qubits)
      : Error("ThresholdIsFullRange",
              "threshold " + std::to_string(threshold) + " marks every " +
                  std::to_string(n_qubits) + "-qubit code; search is vacuous") {}
};

class InvalidRangeError : public Error {
 public:
  explicit InvalidRangeError(const std::string& message)
      : Error("InvalidRange", message) {}
};

}  // namespace minq
