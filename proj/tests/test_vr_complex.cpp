#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "oracles.hpp"
#include "vrph/error.hpp"
#include "vrph/vr_complex.hpp"

using namespace vrph;

namespace {

PointCloud unit_square() { return PointCloud(std::vector<std::vector<double>>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

}  // namespace

TEST_CASE("Simplex validation") {
  CHECK(Simplex{0, 3, 7}.dim() == 2);
  CHECK_THROWS_AS(Simplex(std::vector<Vertex>{}), InputError);
  CHECK_THROWS_AS((Simplex{2, 1}), InputError);
  CHECK_THROWS_AS((Simplex{1, 1}), InputError);
}

TEST_CASE("edge rules") {
  CHECK(parse_edge_rule("paper-2eps") == EdgeRule::paper_2eps);
  CHECK(parse_edge_rule("diameter-eps") == EdgeRule::diameter_eps);
  CHECK(to_string(EdgeRule::diameter_eps) == "diameter-eps");
  CHECK_THROWS_AS(parse_edge_rule("2eps"), InputError);

  const auto dm = distance_matrix(unit_square());
  const Vertex tri[] = {0, 1, 2};
  CHECK(simplex_birth(tri, dm) == doctest::Approx(std::sqrt(2.0) / 2.0));
  CHECK(simplex_birth(tri, dm, EdgeRule::diameter_eps) == doctest::Approx(std::sqrt(2.0)));
  const Vertex v[] = {3};
  CHECK(simplex_birth(v, dm) == 0.0);
  const Vertex bad[] = {0, 9};
  CHECK_THROWS_AS(simplex_birth(bad, dm), InputError);
}

TEST_CASE("unit square") {
  const auto dm = distance_matrix(unit_square());
  const auto f6 = build_vr(dm, 0.6, 2);
  CHECK(f6.size() == 8);
  CHECK(f6.count_by_dim() == std::vector<std::uint64_t>{4, 4, 0});
  const auto f75 = build_vr(dm, 0.75, 2);
  CHECK(f75.size() == 14);
  CHECK(f75.count_by_dim() == std::vector<std::uint64_t>{4, 6, 4});
  CHECK(f75.prefix_size(0.6) == 8);
  CHECK(f75.prefix_size(0.0) == 4);
  CHECK(build_vr(dm, 0.75, 3).size() == 15);

  // Canonical order: (birth, dim, lexicographic).
  CHECK(f75.simplex(4) == Simplex{0, 1});
  CHECK(f75.simplex(5) == Simplex{0, 3});
  CHECK(f75.find(std::vector<Vertex>{1, 3}).has_value());
  CHECK(!f6.find(std::vector<Vertex>{1, 3}).has_value());
}

TEST_CASE("degenerate inputs") {
  const PointCloud one(std::vector<std::vector<double>>{{0.5, 0.5}});
  const auto f = build_vr(distance_matrix(one), 1.0, 0);
  CHECK_THROWS_AS(build_vr(distance_matrix(one), 1.0, 1), InputError);
  CHECK(f.size() == 1);

  // Coincident points: zero-length edge.
  const PointCloud dup(std::vector<std::vector<double>>{{1, 1}, {1, 1}});
  const auto g = build_vr(distance_matrix(dup), 0.1, 1);
  CHECK(g.size() == 3);
  CHECK(g.birth(2) == 0.0);

  const auto dm = distance_matrix(unit_square());
  CHECK_THROWS_AS(build_vr(dm, -0.1, 2), InputError);
  CHECK_THROWS_AS(build_vr(dm, 1.0, -1), InputError);
  CHECK_THROWS_AS(build_vr(dm, 0.0, 2), InputError);
  CHECK_THROWS_AS(build_vr(dm, 1.0, 4), InputError);
  CHECK(build_vr(dm, 0.1, 2).size() == 4);
}

TEST_CASE("budget is enforced before allocation") {
  std::mt19937_64 rng(1);
  const auto c = oracle::random_cloud(rng, 40, 2);
  const auto dm = distance_matrix(c);
  const auto counts = count_vr_simplices(dm, 2.0, 3);
  std::uint64_t total = 0;
  for (auto x : counts) total += x;
  CHECK(total == 40 + 780 + 9880 + 91390);
  CHECK_THROWS_AS(build_vr(dm, 2.0, 3, EdgeRule::paper_2eps, total - 1), ResourceError);
  CHECK(build_vr(dm, 2.0, 3, EdgeRule::paper_2eps, total).size() == total);
}

TEST_CASE("fully_connected_eps") {
  const auto dm = distance_matrix(unit_square());
  CHECK(fully_connected_eps(dm) == doctest::Approx(std::sqrt(2.0) / 2.0));
  CHECK(fully_connected_eps(dm, EdgeRule::diameter_eps) == doctest::Approx(std::sqrt(2.0)));
  const PointCloud one(std::vector<std::vector<double>>{{3.0}});
  CHECK(fully_connected_eps(distance_matrix(one)) == 0.0);
}

TEST_CASE("filtration invariants and agreement with a subset scan") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> count(1, 12), dims(1, 4), top(0, 4);
  std::uniform_real_distribution<double> eps(0.0, 1.2);
  for (int t = 0; t < 150; ++t) {
    const auto c = oracle::random_cloud(rng, static_cast<std::size_t>(count(rng)), static_cast<std::size_t>(dims(rng)));
    const auto dm = distance_matrix(c);
    const double e = eps(rng) + 1e-3;
    const int d = std::min(top(rng), static_cast<int>(c.size()) - 1);
    const EdgeRule rule = t % 2 ? EdgeRule::diameter_eps : EdgeRule::paper_2eps;
    const auto f = build_vr(dm, e, d, rule);

    for (std::size_t i = 0; i < f.size(); ++i) {
      REQUIRE(f.birth(i) <= e);
      if (i > 0) {
        const bool ordered = f.birth(i - 1) < f.birth(i) ||
                             (f.birth(i - 1) == f.birth(i) && (f.dim(i - 1) < f.dim(i) ||
                                                               (f.dim(i - 1) == f.dim(i) &&
                                                                f.simplex(i - 1) < f.simplex(i))));
        REQUIRE(ordered);
      }
      const auto v = f.vertices(i);
      REQUIRE(f.birth(i) == simplex_birth(v, dm, rule));
      if (v.size() > 1) {
        for (std::size_t skip = 0; skip < v.size(); ++skip) {
          std::vector<Vertex> face;
          for (std::size_t k = 0; k < v.size(); ++k)
            if (k != skip) face.push_back(v[k]);
          const auto pos = f.find(face);
          REQUIRE(pos.has_value());
          REQUIRE(*pos < i);
          REQUIRE(f.birth(*pos) <= f.birth(i));
        }
      }
    }

    const auto brute = oracle::subset_scan(c, e, d, rule == EdgeRule::paper_2eps);
    REQUIRE(brute.size() == f.size());
    for (const auto& s : brute) {
      const auto pos = f.find(s.vertices);
      REQUIRE(pos.has_value());
      REQUIRE(f.birth(*pos) == doctest::Approx(s.birth).epsilon(1e-15));
    }

    const auto counts = count_vr_simplices(dm, e, d, rule);
    REQUIRE(counts == f.count_by_dim());
  }
}

TEST_CASE("monotone in eps and deterministic") {
  std::mt19937_64 rng(123);
  for (int t = 0; t < 30; ++t) {
    const auto c = oracle::random_cloud(rng, 25, 3);
    const auto dm = distance_matrix(c);
    const auto small = build_vr(dm, 0.2, 3), big = build_vr(dm, 0.35, 3);
    REQUIRE(small.size() <= big.size());
    for (std::size_t i = 0; i < small.size(); ++i) REQUIRE(big.find(small.vertices(i)).has_value());
    REQUIRE(big.prefix_size(0.2) == small.size());

    const auto again = build_vr(distance_matrix(c, 3), 0.35, 3);
    REQUIRE(again.size() == big.size());
    for (std::size_t i = 0; i < big.size(); ++i) {
      REQUIRE(again.simplex(i) == big.simplex(i));
      REQUIRE(again.birth(i) == big.birth(i));
    }
  }
}

TEST_CASE("from_simplices sorts canonically") {
  std::vector<std::pair<Simplex, double>> entries{
      {Simplex{0, 1}, 1.0}, {Simplex{1}, 0.0}, {Simplex{0}, 0.0}, {Simplex{2}, 0.5}};
  const auto f = Filtration::from_simplices(3, entries, 1.0, 1);
  CHECK(f.simplex(0) == Simplex{0});
  CHECK(f.simplex(1) == Simplex{1});
  CHECK(f.simplex(2) == Simplex{2});
  CHECK(f.simplex(3) == Simplex{0, 1});
}
