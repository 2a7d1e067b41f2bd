#pragma once

#include <vector>

#include "vrph/assignment.hpp"
#include "vrph/persistence.hpp"

namespace vrph {

/// L-infinity distance between two intervals read as (birth, death) points.
/// Two infinite intervals cost |birth difference|; finite against infinite
/// costs +inf. Throws InputError if the dimensions differ.
double interval_cost(const PersistenceInterval& a, const PersistenceInterval& b);

/// L-infinity distance to the nearest diagonal point, (death - birth)/2.
/// Throws InputError for an infinite interval.
double diagonal_cost(const PersistenceInterval& a);

/// Optimal matching of one homology dimension.
struct DimensionMatching {
  int dim = 0;
  double cost = 0.0;  // sum of matched costs raised to p; +inf if infinite bars cannot pair up
  /// Finite part: rows are left intervals then right diagonal slots; columns
  /// are right intervals then left diagonal slots.
  CostMatrix finite_costs;
  Assignment finite_assignment;
  CostMatrix infinite_costs;
  Assignment infinite_assignment;
};

DimensionMatching match_dimension(const std::vector<PersistenceInterval>& left,
                                  const std::vector<PersistenceInterval>& right, double p);

/// p-Wasserstein distance: per-dimension optimal matchings with diagonal
/// projection, summed inside one p-norm. `dims` restricts the dimensions
/// compared; empty means every dimension present in either barcode.
/// Returns +inf when the infinite bars of some dimension differ in number.
double wasserstein_p(const Barcode& b1, const Barcode& b2, double p = 2.0, const std::vector<int>& dims = {});

}  // namespace vrph
