#pragma once

#include <stdexcept>
#include <string>

namespace knotinv {

// Argument outside the mathematical domain of an operation (S outside [0, N],
// eta <= 0, K > N, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed or geometrically invalid input knot. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid run configuration (framing epsilon out of range, zero samples, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Corner planning could not find a positive radius.
class PlanningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Too many integrand evaluations were non-finite. Maps to CLI exit code 3.
class NumericalGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace knotinv
