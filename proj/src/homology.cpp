#include "vrph/homology.hpp"

#include <algorithm>
#include <thread>

#include "vrph/error.hpp"
#include "vrph/persistence.hpp"

namespace vrph {

void SignedChain::add(const Simplex& s, long coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

SignedChain& SignedChain::operator+=(const SignedChain& other) {
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

long SignedChain::coefficient(const Simplex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

SignedChain boundary_signed(const Simplex& s) {
  SignedChain out;
  if (s.dim() <= 0) return out;
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    Simplex facet;
    facet.vertices.reserve(s.vertices.size() - 1);
    for (std::size_t j = 0; j < s.vertices.size(); ++j)
      if (j != i) facet.vertices.push_back(s.vertices[j]);
    out.add(facet, i % 2 == 0 ? 1 : -1);
  }
  return out;
}

SignedChain boundary_signed(const SignedChain& c) {
  SignedChain out;
  for (const auto& [s, coefficient] : c.terms()) {
    const SignedChain facets = boundary_signed(s);
    for (const auto& [facet, sign] : facets.terms()) out.add(facet, coefficient * sign);
  }
  return out;
}

SignedChain boundary_squared_is_zero(const Simplex& s) { return boundary_signed(boundary_signed(s)); }

BoundaryMatrix build_boundary_matrix(const Filtration& f, unsigned threads) {
  const std::size_t n = f.size();
  std::vector<std::vector<std::uint32_t>> columns(n);
  std::vector<int> dims(n);
  auto fill = [&](std::size_t first, std::size_t stride) {
    std::vector<Vertex> facet;
    for (std::size_t j = first; j < n; j += stride) {
      dims[j] = f.dim(j);
      auto v = f.vertices(j);
      if (v.size() < 2) continue;
      auto& col = columns[j];
      col.reserve(v.size());
      for (std::size_t skip = 0; skip < v.size(); ++skip) {
        facet.clear();
        for (std::size_t k = 0; k < v.size(); ++k)
          if (k != skip) facet.push_back(v[k]);
        const auto pos = f.find(facet);
        if (!pos) throw InvariantError("filtration is not closed under faces");
        if (*pos >= j) throw InvariantError("facet appears after its coface in the filtration");
        col.push_back(static_cast<std::uint32_t>(*pos));
      }
      std::sort(col.begin(), col.end());
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || n < 1024) {
    fill(0, 1);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          try {
            fill(t, threads);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return BoundaryMatrix(std::move(columns), std::move(dims));
}

std::vector<std::size_t> skeleton_betti_numbers(const Filtration& f, const Pairing& pairing, double eps) {
  const std::size_t prefix = f.prefix_size(eps);
  const std::size_t top = static_cast<std::size_t>(f.max_dim());
  std::vector<std::size_t> simplices(top + 1, 0), ranks(top + 2, 0);  // ranks[k] = rank of boundary on C_k
  for (std::size_t i = 0; i < prefix; ++i) ++simplices[f.dim(i)];
  for (const auto& [birth, death] : pairing.pairs)
    if (death < prefix) ++ranks[f.dim(death)];
  std::vector<std::size_t> betti(top + 1);
  for (std::size_t k = 0; k <= top; ++k) betti[k] = simplices[k] - ranks[k] - ranks[k + 1];
  return betti;
}

std::vector<std::size_t> betti_numbers(const Filtration& f, const Pairing& pairing, double eps, int max_k) {
  if (eps > f.eps_max()) throw InputError("eps is above the filtration's eps_max");
  if (max_k < 0 || max_k >= f.max_dim())
    throw InputError("max_k must be below the filtration's max_dim (" + std::to_string(f.max_dim()) +
                     "); rebuild with a higher dimension cap");
  auto betti = skeleton_betti_numbers(f, pairing, eps);
  betti.resize(static_cast<std::size_t>(max_k) + 1);
  return betti;
}

std::vector<std::size_t> betti_numbers(const Filtration& f, double eps, int max_k) {
  if (eps > f.eps_max()) throw InputError("eps is above the filtration's eps_max");
  if (max_k < 0 || max_k >= f.max_dim())
    throw InputError("max_k must be below the filtration's max_dim (" + std::to_string(f.max_dim()) + ")");
  return betti_numbers(f, reduce_with_clearing(build_boundary_matrix(f)), eps, max_k);
}

}  // namespace vrph
