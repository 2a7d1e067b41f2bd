#pragma once

#include <cstddef>
#include <vector>

namespace vrph {

/// Dense square cost matrix, row-major.
struct CostMatrix {
  std::size_t n = 0;
  std::vector<double> cost;

  explicit CostMatrix(std::size_t size = 0) : n(size), cost(size * size, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return cost[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return cost[i * n + j]; }
};

/// Minimum-cost perfect matching with its dual certificate: row_potential[i] +
/// col_potential[j] <= cost(i, j) everywhere, with equality on matched pairs.
struct Assignment {
  std::vector<std::size_t> row_to_col;
  std::vector<double> row_potential;
  std::vector<double> col_potential;
  double total = 0.0;  // sum of matched costs, accumulated in row order
};

/// Hungarian algorithm (shortest augmenting paths with potentials), O(n^3).
/// Costs must be finite.
Assignment solve_assignment(const CostMatrix& c);

}  // namespace vrph
