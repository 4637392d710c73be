#pragma once

#include <stdexcept>
#include <string>

namespace djc {

/// Thrown when an operation is asked to run outside the regime it is
/// defined for (e.g. closed-form evolution with detuned frequencies, or
/// zero counting for an irrational coupling ratio).
class UnsupportedConfiguration : public std::domain_error {
  public:
    explicit UnsupportedConfiguration(const std::string& what)
        : std::domain_error(what) {}
};

/// Thrown when a state or density matrix violates its invariants
/// (unnormalized vector, non-Hermitian matrix, trace != 1, ...).
class InvalidState : public std::invalid_argument {
  public:
    explicit InvalidState(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Thrown when a numerical procedure produces results outside its
/// certified error budget (norm drift, negative eigenvalues beyond
/// rounding level). Indicates a bug or a misused step size, never a
/// condition to be silently repaired.
class NumericalFailure : public std::runtime_error {
  public:
    explicit NumericalFailure(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace djc
