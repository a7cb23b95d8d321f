#pragma once

#include <stdexcept>
#include <string>

namespace ea {

// Base for all recoverable errors raised by the workbench. The suite runner
// quarantines these per model instead of aborting a sweep.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotALattice : public Error {
 public:
  NotALattice() : Error("operation requires a lattice effect algebra") {}
};

class SubsetMismatch : public Error {
 public:
  SubsetMismatch() : Error("subset is not contained in the ambient subset") {}
};

class NotSubEffectAlgebra : public Error {
 public:
  NotSubEffectAlgebra() : Error("subset is not a sub-effect algebra") {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(unsigned long long budget)
      : Error("family enumeration budget exceeded (" + std::to_string(budget) + ")") {}
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

class ComponentTooSmall : public Error {
 public:
  using Error::Error;
};

class RecipeError : public Error {
 public:
  using Error::Error;
};

// A known structural fact failed on a validated model. Always an
// implementation bug, never a property of the input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ea
