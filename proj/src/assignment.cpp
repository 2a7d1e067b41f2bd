#include "vrph/assignment.hpp"

#include <cmath>
#include <limits>

#include "vrph/error.hpp"

namespace vrph {

Assignment solve_assignment(const CostMatrix& c) {
  const std::size_t n = c.n;
  for (double v : c.cost)
    if (!std::isfinite(v)) throw InputError("assignment costs must be finite");

  // 1-based arrays; index 0 is the virtual column used to start each augmentation.
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = c(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out;
  out.row_to_col.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j)
    if (match[j] != 0) out.row_to_col[match[j] - 1] = j - 1;
  out.row_potential.assign(u.begin() + 1, u.end());
  out.col_potential.assign(v.begin() + 1, v.end());
  for (std::size_t i = 0; i < n; ++i) out.total += c(i, out.row_to_col[i]);
  return out;
}

}  // namespace vrph
