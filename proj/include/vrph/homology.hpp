#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "vrph/vr_complex.hpp"

namespace vrph {

/// Integer chain: a finite formal sum of oriented simplices. Kept canonical
/// (no zero coefficients).
class SignedChain {
 public:
  SignedChain() = default;

  void add(const Simplex& s, long coefficient);
  SignedChain& operator+=(const SignedChain& other);
  friend SignedChain operator+(SignedChain a, const SignedChain& b) { return a += b; }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  long coefficient(const Simplex& s) const;
  const std::map<Simplex, long>& terms() const { return terms_; }

  friend bool operator==(const SignedChain&, const SignedChain&) = default;

 private:
  std::map<Simplex, long> terms_;
};

/// Alternating facet sum: sum_i (-1)^i [v_0 .. v_i omitted .. v_k].
SignedChain boundary_signed(const Simplex& s);

/// Linear extension of boundary_signed to chains.
SignedChain boundary_signed(const SignedChain& c);

/// The boundary of the boundary of `s`. Always the empty chain.
SignedChain boundary_squared_is_zero(const Simplex& s);

/// GF(2) boundary matrix in filtration order. Column j holds the ascending
/// filtration positions of simplex j's facets.
class BoundaryMatrix {
 public:
  BoundaryMatrix() = default;
  BoundaryMatrix(std::vector<std::vector<std::uint32_t>> columns, std::vector<int> dims)
      : columns_(std::move(columns)), dims_(std::move(dims)) {}

  std::size_t size() const { return columns_.size(); }
  std::span<const std::uint32_t> column(std::size_t j) const { return columns_[j]; }
  int dim(std::size_t j) const { return dims_[j]; }

 private:
  std::vector<std::vector<std::uint32_t>> columns_;
  std::vector<int> dims_;
};

/// Throws InvariantError if a facet of some simplex is missing from `f` or
/// appears later in the order.
BoundaryMatrix build_boundary_matrix(const Filtration& f, unsigned threads = 1);

struct Pairing;

/// Betti numbers beta_0..beta_max_k of the complex at scale eps, over GF(2).
/// Requires eps <= f.eps_max() and max_k < f.max_dim(); throws InputError otherwise.
std::vector<std::size_t> betti_numbers(const Filtration& f, double eps, int max_k);

/// Same, reusing a pairing already computed for `f`.
std::vector<std::size_t> betti_numbers(const Filtration& f, const Pairing& pairing, double eps, int max_k);

/// Betti numbers of the truncated complex itself in every dimension
/// 0..max_dim (the top one counts cycles that no cap simplex can fill).
std::vector<std::size_t> skeleton_betti_numbers(const Filtration& f, const Pairing& pairing, double eps);

}  // namespace vrph
