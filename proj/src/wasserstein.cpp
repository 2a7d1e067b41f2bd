#include "vrph/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "vrph/error.hpp"

namespace vrph {

double interval_cost(const PersistenceInterval& a, const PersistenceInterval& b) {
  if (a.dim != b.dim) throw InputError("cannot match intervals of different homology dimensions");
  if (a.infinite() && b.infinite()) return std::abs(a.birth - b.birth);
  if (a.infinite() || b.infinite()) return kInfinity;
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double diagonal_cost(const PersistenceInterval& a) {
  if (a.infinite()) throw InputError("an infinite interval has no diagonal projection");
  return (a.death - a.birth) / 2.0;
}

DimensionMatching match_dimension(const std::vector<PersistenceInterval>& left,
                                  const std::vector<PersistenceInterval>& right, double p) {
  if (!(p >= 1.0)) throw InputError("Wasserstein exponent p must be >= 1");
  std::vector<PersistenceInterval> lf, li, rf, ri;
  for (const auto& iv : left) (iv.infinite() ? li : lf).push_back(iv);
  for (const auto& iv : right) (iv.infinite() ? ri : rf).push_back(iv);

  DimensionMatching m;
  if (!left.empty()) m.dim = left.front().dim;
  else if (!right.empty()) m.dim = right.front().dim;
  auto power = [p](double x) { return p == 1.0 ? x : std::pow(x, p); };

  // Every left interval may go to any left-diagonal slot and vice versa;
  // diagonal slots match each other for free.
  const std::size_t n = lf.size(), k = rf.size();
  m.finite_costs = CostMatrix(n + k);
  for (std::size_t i = 0; i < n + k; ++i) {
    for (std::size_t j = 0; j < n + k; ++j) {
      double c = 0.0;
      if (i < n && j < k) c = power(interval_cost(lf[i], rf[j]));
      else if (i < n) c = power(diagonal_cost(lf[i]));
      else if (j < k) c = power(diagonal_cost(rf[j]));
      m.finite_costs(i, j) = c;
    }
  }
  m.finite_assignment = solve_assignment(m.finite_costs);
  m.cost = m.finite_assignment.total;

  if (li.size() != ri.size()) {
    m.cost = kInfinity;
    return m;
  }
  m.infinite_costs = CostMatrix(li.size());
  for (std::size_t i = 0; i < li.size(); ++i)
    for (std::size_t j = 0; j < ri.size(); ++j) m.infinite_costs(i, j) = power(interval_cost(li[i], ri[j]));
  m.infinite_assignment = solve_assignment(m.infinite_costs);
  m.cost += m.infinite_assignment.total;
  return m;
}

namespace {

bool interval_less(const PersistenceInterval& a, const PersistenceInterval& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.birth != b.birth) return a.birth < b.birth;
  return a.death < b.death;
}

}  // namespace

double wasserstein_p(const Barcode& b1, const Barcode& b2, double p, const std::vector<int>& dims) {
  if (!(p >= 1.0)) throw InputError("Wasserstein exponent p must be >= 1");
  // Canonical argument order makes the result exactly symmetric.
  auto sorted = [](const Barcode& b) {
    auto v = b.intervals;
    std::sort(v.begin(), v.end(), interval_less);
    return v;
  };
  auto left = sorted(b1), right = sorted(b2);
  if (std::lexicographical_compare(right.begin(), right.end(), left.begin(), left.end(), interval_less))
    std::swap(left, right);

  std::set<int> wanted(dims.begin(), dims.end());
  if (wanted.empty()) {
    for (const auto& iv : left) wanted.insert(iv.dim);
    for (const auto& iv : right) wanted.insert(iv.dim);
  }
  double total = 0.0;
  for (int d : wanted) {
    std::vector<PersistenceInterval> l, r;
    for (const auto& iv : left)
      if (iv.dim == d) l.push_back(iv);
    for (const auto& iv : right)
      if (iv.dim == d) r.push_back(iv);
    const double c = match_dimension(l, r, p).cost;
    if (std::isinf(c)) return kInfinity;
    total += c;
  }
  return p == 1.0 ? total : std::pow(total, 1.0 / p);
}

}  // namespace vrph
