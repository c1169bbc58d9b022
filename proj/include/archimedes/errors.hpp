#pragma once

#include <stdexcept>
#include <string>

namespace arch {

/// A caller violated an operation's precondition (bad index, zero divisor, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested infinite series does not converge.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A brute-force search would exceed the configured size ceiling.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two exact routes that must agree did not. Never expected to fire.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace arch
