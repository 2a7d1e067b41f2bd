#pragma once

#include <array>

namespace vrph {

using Matrix3 = std::array<std::array<double, 3>, 3>;
using Vector3 = std::array<double, 3>;

struct SymmetricEigen3 {
  Vector3 values;                 // ascending
  std::array<Vector3, 3> vectors;  // vectors[i] pairs with values[i], unit norm
  int sweeps = 0;
};

/// Cyclic Jacobi rotations on a symmetric 3x3 matrix until the off-diagonal
/// Frobenius norm is at most `rel_tol` times the matrix norm. Throws
/// ComputationError if that does not happen within `max_sweeps`.
SymmetricEigen3 jacobi_eigen(const Matrix3& a, double rel_tol = 1e-13, int max_sweeps = 64);

double frobenius_norm(const Matrix3& a);
Vector3 multiply(const Matrix3& a, const Vector3& x);

}  // namespace vrph
