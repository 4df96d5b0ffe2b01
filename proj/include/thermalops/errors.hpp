#pragma once

#include <stdexcept>
#include <string>

namespace thermalops {

// Base class for every error raised by the library. Each failure mode gets
// its own type so callers can catch the condition they care about.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// eigh / operator constructors: input not Hermitian within tolerance.
struct NotHermitianError : Error {
  using Error::Error;
};

// Iterative eigensolver exceeded its iteration budget.
struct ConvergenceError : Error {
  using Error::Error;
};

// Operand dimensions are inconsistent with each other or with the setup.
struct DimensionMismatchError : Error {
  using Error::Error;
};

// Tensor product would exceed the configured maximum dimension.
struct DimensionOverflowError : Error {
  using Error::Error;
};

// Scalar function undefined on a (clamped) eigenvalue, or a state/config
// value outside its admissible range.
struct DomainError : Error {
  using Error::Error;
};

// Coherent Gibbs state requested for a Hamiltonian with a degenerate
// spectrum; the energy eigenbasis is ambiguous there.
struct DegenerateSpectrumError : Error {
  using Error::Error;
};

// Partial swap requested for system/bath Hamiltonians whose spectra do
// not match.
struct NotResonantError : Error {
  using Error::Error;
};

struct NotUnitaryError : Error {
  using Error::Error;
};

// Quantity requires a finite temperature (beta > 0).
struct BetaZeroError : Error {
  using Error::Error;
};

// A relative-entropy term is infinite (support of rho not contained in
// support of sigma) where the identity bookkeeping needs it finite.
struct SupportViolationError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Sweep parameter name not one of the supported set.
struct UnknownParameterError : ConfigError {
  using ConfigError::ConfigError;
};

}  // namespace thermalops
