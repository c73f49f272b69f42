#pragma once

#include <stdexcept>

namespace covdeg {

/// Precondition or domain violation: zero denominators, poles, out-of-range indices.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// No rational function within the requested degree bounds reproduces the series.
class ReconstructionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A numerical routine could not reach its tolerance within its work budget.
class AccuracyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace covdeg
