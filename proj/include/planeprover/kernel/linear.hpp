#pragma once

#include <vector>

#include "planeprover/kernel/scalar.hpp"

namespace planeprover::kernel {

enum class SolveStatus { unique, underdetermined, inconsistent };

struct LinearSolution {
  SolveStatus status = SolveStatus::inconsistent;
  // Pivot unknowns expressed through parameters and free unknowns. Empty
  // when inconsistent.
  std::vector<Binding> bindings;
};

// Gaussian elimination over the rational-function field of the remaining
// indeterminates. A pivot is usable iff it is not identically zero. Only the
// numerator of each equation is used; it must have total degree <= 1 in the
// unknowns (Errc::nonlinear_system otherwise).
LinearSolution solve_linear(const std::vector<Scalar>& equations, const std::vector<Var>& unknowns);

using Matrix = std::vector<std::vector<Scalar>>;

// Fraction-free (Bareiss) determinant. Throws Errc::shape unless square.
Scalar determinant(const Matrix& m);

}  // namespace planeprover::kernel
