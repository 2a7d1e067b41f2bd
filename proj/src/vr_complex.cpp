#include "vrph/vr_complex.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "vrph/error.hpp"

namespace vrph {

Simplex::Simplex(std::vector<Vertex> v) : vertices(std::move(v)) {
  if (vertices.empty()) throw InputError("a simplex needs at least one vertex");
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i - 1] >= vertices[i]) throw InputError("simplex vertices must be strictly ascending");
}

std::string to_string(EdgeRule rule) { return rule == EdgeRule::paper_2eps ? "paper-2eps" : "diameter-eps"; }

EdgeRule parse_edge_rule(const std::string& name) {
  if (name == "paper-2eps") return EdgeRule::paper_2eps;
  if (name == "diameter-eps") return EdgeRule::diameter_eps;
  throw InputError("unknown edge rule '" + name + "' (expected paper-2eps or diameter-eps)");
}

double simplex_birth(std::span<const Vertex> vertices, const DistanceMatrix& dm, EdgeRule rule) {
  for (Vertex v : vertices)
    if (v >= dm.size()) throw InputError("vertex index " + std::to_string(v) + " out of range");
  double birth = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      birth = std::max(birth, edge_scale(dm(vertices[i], vertices[j]), rule));
  return birth;
}

Simplex Filtration::simplex(std::size_t i) const {
  auto v = vertices(i);
  Simplex s;
  s.vertices.assign(v.begin(), v.end());
  return s;
}

std::vector<std::uint64_t> Filtration::count_by_dim() const {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_dim_) + 1, 0);
  for (auto d : dims_) ++counts[d];
  return counts;
}

std::size_t Filtration::prefix_size(double eps) const {
  return static_cast<std::size_t>(std::upper_bound(births_.begin(), births_.end(), eps) - births_.begin());
}

std::optional<std::size_t> Filtration::find(std::span<const Vertex> v) const {
  if (v.empty() || v.size() > lookup_.size()) return std::nullopt;
  const auto& table = lookup_[v.size() - 1];
  auto less = [&](std::uint32_t pos, std::span<const Vertex> key) {
    auto s = vertices(pos);
    return std::lexicographical_compare(s.begin(), s.end(), key.begin(), key.end());
  };
  auto it = std::lower_bound(table.begin(), table.end(), v, less);
  if (it == table.end()) return std::nullopt;
  auto s = vertices(*it);
  if (!std::equal(s.begin(), s.end(), v.begin(), v.end())) return std::nullopt;
  return *it;
}

void Filtration::finalize() {
  const std::size_t n = births_.size();
  if (n > std::numeric_limits<std::uint32_t>::max())
    throw ResourceError("filtration exceeds 2^32-1 simplices");

  auto lex_less = [&](std::size_t a, std::size_t b) {
    auto sa = vertices(a), sb = vertices(b);
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
  };
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (births_[a] != births_[b]) return births_[a] < births_[b];
    if (dims_[a] != dims_[b]) return dims_[a] < dims_[b];
    return lex_less(a, b);
  });

  std::vector<double> births(n);
  std::vector<std::uint8_t> dims(n);
  std::vector<std::uint64_t> offsets(n);
  std::vector<Vertex> verts;
  verts.reserve(verts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto src = order[i];
    births[i] = births_[src];
    dims[i] = dims_[src];
    offsets[i] = verts.size();
    auto v = vertices(src);
    verts.insert(verts.end(), v.begin(), v.end());
  }
  order.clear();
  order.shrink_to_fit();
  births_ = std::move(births);
  dims_ = std::move(dims);
  offsets_ = std::move(offsets);
  verts_ = std::move(verts);

  lookup_.assign(static_cast<std::size_t>(max_dim_) + 1, {});
  for (std::size_t i = 0; i < n; ++i) {
    if (dims_[i] > max_dim_) throw InvariantError("simplex dimension above the filtration cap");
    lookup_[dims_[i]].push_back(static_cast<std::uint32_t>(i));
  }
  for (auto& table : lookup_) std::sort(table.begin(), table.end(), lex_less);
}

Filtration Filtration::from_simplices(std::size_t n_vertices, std::vector<std::pair<Simplex, double>> entries,
                                      double eps_max, int max_dim, EdgeRule rule) {
  Filtration f;
  f.n_vertices_ = n_vertices;
  f.eps_max_ = eps_max;
  f.max_dim_ = max_dim;
  f.rule_ = rule;
  for (auto& [s, birth] : entries) {
    if (s.vertices.empty()) throw InputError("empty simplex");
    if (s.dim() > max_dim) throw InputError("simplex dimension above max_dim");
    if (s.vertices.back() >= n_vertices) throw InputError("vertex index out of range");
    f.births_.push_back(birth);
    f.dims_.push_back(static_cast<std::uint8_t>(s.dim()));
    f.offsets_.push_back(f.verts_.size());
    f.verts_.insert(f.verts_.end(), s.vertices.begin(), s.vertices.end());
  }
  f.finalize();
  return f;
}

namespace {

/// Depth-first clique expansion: every simplex is reached from its facet that
/// drops the highest vertex, by appending a higher-indexed common neighbour.
class CliqueExpander {
 public:
  CliqueExpander(const DistanceMatrix& dm, double eps_max, int max_dim, EdgeRule rule)
      : dm_(dm), max_dim_(max_dim), rule_(rule), n_(dm.size()), words_((n_ + 63) / 64), adj_(n_ * words_, 0),
        higher_(n_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (edge_scale(dm(i, j), rule) <= eps_max) {
          adj_[i * words_ + j / 64] |= 1ull << (j % 64);
          adj_[j * words_ + i / 64] |= 1ull << (i % 64);
          higher_[i].push_back(static_cast<Vertex>(j));
        }
  }

  /// Calls visit(vertices, birth) for every simplex; visit returns false to stop.
  template <class Visit>
  void run(Visit&& visit) {
    std::vector<Vertex> simplex;
    simplex.reserve(static_cast<std::size_t>(max_dim_) + 1);
    for (std::size_t v = 0; v < n_ && !stopped_; ++v) {
      simplex.assign(1, static_cast<Vertex>(v));
      grow(simplex, 0.0, higher_[v], visit);
    }
  }

 private:
  bool adjacent(Vertex a, Vertex b) const { return (adj_[a * words_ + b / 64] >> (b % 64)) & 1u; }

  template <class Visit>
  void grow(std::vector<Vertex>& simplex, double birth, const std::vector<Vertex>& candidates, Visit& visit) {
    if (!visit(std::span<const Vertex>(simplex), birth)) {
      stopped_ = true;
      return;
    }
    if (static_cast<int>(simplex.size()) > max_dim_) return;
    const bool last_level = static_cast<int>(simplex.size()) == max_dim_;
    std::vector<Vertex> next;
    for (std::size_t idx = 0; idx < candidates.size() && !stopped_; ++idx) {
      const Vertex w = candidates[idx];
      double b = birth;
      for (Vertex v : simplex) b = std::max(b, edge_scale(dm_(v, w), rule_));
      next.clear();
      if (!last_level)
        for (std::size_t c = idx + 1; c < candidates.size(); ++c)
          if (adjacent(w, candidates[c])) next.push_back(candidates[c]);
      simplex.push_back(w);
      grow(simplex, b, next, visit);
      simplex.pop_back();
    }
  }

  const DistanceMatrix& dm_;
  int max_dim_;
  EdgeRule rule_;
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::vector<Vertex>> higher_;
  bool stopped_ = false;
};

void check_vr_parameters(const DistanceMatrix& dm, double eps_max, int max_dim) {
  if (dm.size() == 0) throw InputError("distance matrix is empty");
  if (!(eps_max > 0.0)) throw InputError("eps_max must be positive");
  if (max_dim < 0 || static_cast<std::size_t>(max_dim) > dm.size() - 1)
    throw InputError("max_dim must lie in [0, n-1]");
  if (max_dim > 254) throw InputError("max_dim above 254 is not supported");
}

}  // namespace

std::vector<std::uint64_t> count_vr_simplices(const DistanceMatrix& dm, double eps_max, int max_dim, EdgeRule rule,
                                              std::uint64_t limit) {
  check_vr_parameters(dm, eps_max, max_dim);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_dim) + 1, 0);
  std::uint64_t total = 0;
  CliqueExpander(dm, eps_max, max_dim, rule).run([&](std::span<const Vertex> s, double) {
    ++counts[s.size() - 1];
    return ++total <= limit;
  });
  return counts;
}

Filtration build_vr(const DistanceMatrix& dm, double eps_max, int max_dim, EdgeRule rule,
                    std::uint64_t max_simplices) {
  const auto counts = count_vr_simplices(dm, eps_max, max_dim, rule, max_simplices);
  const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (total > max_simplices) {
    throw ResourceError("Vietoris-Rips complex exceeds the budget of " + std::to_string(max_simplices) +
                        " simplices; raise --max-simplices to proceed");
  }
  std::uint64_t vertex_slots = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) vertex_slots += counts[k] * (k + 1);

  Filtration f;
  f.n_vertices_ = dm.size();
  f.eps_max_ = eps_max;
  f.max_dim_ = max_dim;
  f.rule_ = rule;
  f.births_.reserve(total);
  f.dims_.reserve(total);
  f.offsets_.reserve(total);
  f.verts_.reserve(vertex_slots);
  CliqueExpander(dm, eps_max, max_dim, rule).run([&](std::span<const Vertex> s, double birth) {
    f.births_.push_back(birth);
    f.dims_.push_back(static_cast<std::uint8_t>(s.size() - 1));
    f.offsets_.push_back(f.verts_.size());
    f.verts_.insert(f.verts_.end(), s.begin(), s.end());
    return true;
  });
  f.finalize();
  return f;
}

double fully_connected_eps(const DistanceMatrix& dm, EdgeRule rule) {
  double diameter = 0.0;
  for (std::size_t i = 0; i < dm.size(); ++i)
    for (std::size_t j = i + 1; j < dm.size(); ++j) diameter = std::max(diameter, dm(i, j));
  return edge_scale(diameter, rule);
}

}  // namespace vrph
