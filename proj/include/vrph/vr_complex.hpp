#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vrph/geometry.hpp"

namespace vrph {

using Vertex = std::uint32_t;

/// Vertex set with strictly ascending indices. The ascending order is the
/// representative of the simplex's orientation class.
struct Simplex {
  std::vector<Vertex> vertices;

  Simplex() = default;
  /// Throws InputError unless `v` is non-empty and strictly ascending.
  explicit Simplex(std::vector<Vertex> v);
  Simplex(std::initializer_list<Vertex> v) : Simplex(std::vector<Vertex>(v)) {}

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

/// How a pairwise distance d translates into the scale at which the edge appears.
enum class EdgeRule {
  paper_2eps,    // edge present once d <= 2*eps, so birth = d/2
  diameter_eps,  // edge present once d <= eps, so birth = d
};

std::string to_string(EdgeRule rule);
EdgeRule parse_edge_rule(const std::string& name);

inline double edge_scale(double distance, EdgeRule rule) {
  return rule == EdgeRule::paper_2eps ? distance / 2.0 : distance;
}

/// Smallest eps admitting the simplex: max over vertex pairs of edge_scale.
/// Zero for a vertex. Throws InputError for out-of-range indices.
double simplex_birth(std::span<const Vertex> vertices, const DistanceMatrix& dm,
                     EdgeRule rule = EdgeRule::paper_2eps);

/// Budget used when none is given: 8 GiB at an estimated 64 bytes per simplex
/// (storage, lookup and reduction columns).
inline constexpr std::uint64_t kDefaultMemoryBytes = 8ull << 30;
inline constexpr std::uint64_t kBytesPerSimplex = 64;
inline constexpr std::uint64_t kDefaultMaxSimplices = kDefaultMemoryBytes / kBytesPerSimplex;

/// Simplices sorted by (birth, dim, lexicographic vertices), closed under faces.
/// Storage is flat; vertices(i) returns a view into it.
class Filtration {
 public:
  Filtration() = default;

  /// Assembles a filtration from explicit (simplex, birth) pairs; they are put
  /// into canonical order. Face closure is not checked here.
  static Filtration from_simplices(std::size_t n_vertices, std::vector<std::pair<Simplex, double>> entries,
                                   double eps_max, int max_dim, EdgeRule rule = EdgeRule::paper_2eps);

  std::size_t size() const { return births_.size(); }
  double birth(std::size_t i) const { return births_[i]; }
  int dim(std::size_t i) const { return dims_[i]; }
  std::span<const Vertex> vertices(std::size_t i) const {
    return {verts_.data() + offsets_[i], static_cast<std::size_t>(dims_[i]) + 1};
  }
  Simplex simplex(std::size_t i) const;

  double eps_max() const { return eps_max_; }
  int max_dim() const { return max_dim_; }
  std::size_t n_vertices() const { return n_vertices_; }
  EdgeRule edge_rule() const { return rule_; }

  /// Number of simplices of each dimension 0..max_dim.
  std::vector<std::uint64_t> count_by_dim() const;
  /// Number of simplices with birth <= eps (a prefix, by the sort order).
  std::size_t prefix_size(double eps) const;
  /// Filtration position of a simplex, if present.
  std::optional<std::size_t> find(std::span<const Vertex> vertices) const;

 private:
  friend Filtration build_vr(const DistanceMatrix&, double, int, EdgeRule, std::uint64_t);
  void finalize();  // sort canonically and build the lookup tables

  std::size_t n_vertices_ = 0;
  double eps_max_ = 0.0;
  int max_dim_ = 0;
  EdgeRule rule_ = EdgeRule::paper_2eps;

  std::vector<double> births_;
  std::vector<std::uint8_t> dims_;
  std::vector<std::uint64_t> offsets_;
  std::vector<Vertex> verts_;

  std::vector<std::vector<std::uint32_t>> lookup_;  // per dim, positions in lexicographic vertex order
};

/// Counts the simplices build_vr would produce, per dimension, without
/// storing them. Stops early (returning partial counts) once the total
/// exceeds `limit`.
std::vector<std::uint64_t> count_vr_simplices(const DistanceMatrix& dm, double eps_max, int max_dim,
                                              EdgeRule rule = EdgeRule::paper_2eps,
                                              std::uint64_t limit = UINT64_MAX);

/// Vietoris-Rips filtration of all simplices of dimension <= max_dim with
/// birth <= eps_max. Throws InputError on bad parameters and ResourceError
/// when the simplex count would exceed `max_simplices`; the count is taken
/// before any simplex storage is allocated.
Filtration build_vr(const DistanceMatrix& dm, double eps_max, int max_dim, EdgeRule rule = EdgeRule::paper_2eps,
                    std::uint64_t max_simplices = kDefaultMaxSimplices);

/// Scale at which every pair of points is joined (the full simplex appears).
double fully_connected_eps(const DistanceMatrix& dm, EdgeRule rule = EdgeRule::paper_2eps);

}  // namespace vrph
