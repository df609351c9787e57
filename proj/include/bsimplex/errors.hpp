#ifndef BSIMPLEX_ERRORS_HPP_
#define BSIMPLEX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bsimplex {

// Argument outside the mathematical domain of an operation (z <= 0, a <= 0,
// weights that do not sum to one, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A lattice, grid or exact-arithmetic budget would exceed its configured cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Mismatched dimensions between related arguments (multi-index vs point,
// estimator output vs reference grid).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation point too close to the simplex boundary for a density that is
// singular there.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace bsimplex

#endif  // BSIMPLEX_ERRORS_HPP_
