#include "vrph/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vrph/error.hpp"

namespace vrph {

double frobenius_norm(const Matrix3& a) {
  double s = 0.0;
  for (const auto& row : a)
    for (double v : row) s += v * v;
  return std::sqrt(s);
}

Vector3 multiply(const Matrix3& a, const Vector3& x) {
  Vector3 y{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) y[i] += a[i][j] * x[j];
  return y;
}

namespace {

double off_diagonal_norm(const Matrix3& a) {
  return std::sqrt(2.0 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]));
}

}  // namespace

SymmetricEigen3 jacobi_eigen(const Matrix3& input, double rel_tol, int max_sweeps) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (input[i][j] != input[j][i]) throw InputError("jacobi_eigen: matrix is not symmetric");

  Matrix3 a = input;
  Matrix3 v{};
  for (int i = 0; i < 3; ++i) v[i][i] = 1.0;

  const double scale = frobenius_norm(input);
  const double target = rel_tol * scale;
  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweep++ >= max_sweeps) throw ComputationError("jacobi_eigen: no convergence");
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (a[p][q] == 0.0) continue;
        // Rotation angle chosen to annihilate a[p][q] (Rutishauser's stable form).
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < 3; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        a[p][q] = a[q][p] = 0.0;
        for (int k = 0; k < 3; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] < a[y][y]; });
  SymmetricEigen3 out;
  out.sweeps = sweep;
  for (int i = 0; i < 3; ++i) {
    const int c = order[i];
    out.values[i] = a[c][c];
    for (int k = 0; k < 3; ++k) out.vectors[i][k] = v[k][c];
  }
  return out;
}

}  // namespace vrph
