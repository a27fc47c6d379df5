#pragma once

#include <stdexcept>
#include <string>

namespace gpoly {

// Raised when a quadrature, determinant, or root solve cannot meet its
// accuracy contract (imaginary residue too large, truncation tail too fat,
// bracketing failure, non-positive eigenvalue of a PSD matrix, ...).
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an enumeration would exceed its advertised work budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for inconsistent or infeasible experiment configuration.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a mathematical identity check fails beyond tolerance.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gpoly
