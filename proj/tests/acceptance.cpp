// Acceptance suite: one PASS/FAIL line per criterion, tolerances fixed below.
// Exit status is 0 iff the set of failing criteria equals the --xfail set.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vrph/cli.hpp"
#include "vrph/error.hpp"
#include "vrph/generators.hpp"
#include "vrph/persistence.hpp"
#include "vrph/wasserstein.hpp"

using namespace vrph;

namespace {

constexpr double kSphereSeconds = 60.0;   // criterion 1 runtime bound
constexpr double kMsdSeconds = 300.0;     // criterion 2 per-run bound
constexpr double kPropertySeconds = 300.0;  // criterion 5 total bound
constexpr double kTriangleTol = 1e-9;
constexpr double kToeplitzRelTol = 1e-9;
constexpr double kCircleBarLength = 0.3;
constexpr EdgeRule kRule = EdgeRule::diameter_eps;  // reproduces the reference simplex counts
constexpr double kMsdBarcodeEps = 0.42;   // every finite MSD bar dies below this
constexpr int kMsdBarcodeMaxDim = 4;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::string counts_text(const std::vector<std::uint64_t>& c) {
  std::string s;
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    s += (k ? "/" : "") + std::to_string(c[k]);
    total += c[k];
  }
  return s + " = " + std::to_string(total);
}

struct Report {
  std::set<int> failed;
  void line(int id, bool ok, const std::string& what) {
    std::printf("%s  criterion %d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    std::fflush(stdout);
    if (!ok) failed.insert(id);
  }
  void info(const std::string& what) {
    std::printf("      %s\n", what.c_str());
    std::fflush(stdout);
  }
};

struct MsdRun {
  const char* label;
  double k2;
  int mode;
  double eps;  // reference scale for beta = [1,0,0,0]
  long reference_simplices;
};

const MsdRun kMsdRuns[] = {
    {"omega1", 10000.0, 1, 0.77, 188087202}, {"omega2", 10000.0, 2, 0.33, 160639},
    {"omega3", 10000.0, 3, 0.31, 93917},      {"omega1'", 5000.0, 1, 0.38, 339447},
    {"omega2'", 5000.0, 2, 0.32, 87571},      {"omega3'", 5000.0, 3, 0.30, 97341},
};

PointCloud msd_cloud(const MsdRun& r) {
  MsdConfig cfg;
  cfg.stiffness[1] = r.k2;
  cfg.mode_index = r.mode;
  return gen_msd_manifold(cfg);
}

// ---------------------------------------------------------------------------

void sphere_topology(Report& rep) {
  const std::vector<std::size_t> want{1, 0, 1};
  bool ok = true;

  auto t0 = Clock::now();
  const auto fib = distance_matrix(gen_fibonacci_sphere(500));
  const auto ff = build_vr(fib, 0.25, 3, kRule);
  const auto fb = betti_numbers(ff, 0.25, 2);
  const double fib_seconds = seconds_since(t0);
  ok &= fb == want && fib_seconds < kSphereSeconds;
  rep.info(fmt("Fibonacci n=500 eps=0.25 %s: betti %s, %.2f s, simplices %s (reference 4202)", to_string(kRule).c_str(),
               format_betti(fb).c_str(), fib_seconds, counts_text(ff.count_by_dim()).c_str()));
  t0 = Clock::now();
  const auto fp = build_vr(fib, 0.25, 3, EdgeRule::paper_2eps);
  const auto fpb = betti_numbers(fp, 0.25, 2);
  const double fp_seconds = seconds_since(t0);
  ok &= fpb == want && fp_seconds < kSphereSeconds;
  rep.info(fmt("Fibonacci n=500 eps=0.25 paper-2eps: betti %s, %.2f s, simplices %s", format_betti(fpb).c_str(),
               fp_seconds, counts_text(fp.count_by_dim()).c_str()));

  const auto grid = distance_matrix(gen_sphere_latlon(20, 10, SphereForm::standard, LatLonGrid::inclusive));
  const auto gf = build_vr(grid, 0.5, 3, kRule);
  const auto gb = betti_numbers(gf, 0.5, 2);
  ok &= gb == want;
  rep.info(fmt("lat-lon 20x10 inclusive (200 pts) eps=0.5 %s: betti %s, simplices %s (reference 112094)",
               to_string(kRule).c_str(), format_betti(gb).c_str(), counts_text(gf.count_by_dim()).c_str()));
  rep.info(fmt("lat-lon 20x10 inclusive eps=0.5 paper-2eps: simplices %s",
               counts_text(count_vr_simplices(grid, 0.5, 3, EdgeRule::paper_2eps)).c_str()));

  const auto periodic = distance_matrix(gen_sphere_latlon(20, 11));
  const auto pf = build_vr(periodic, 0.5, 3, kRule);
  const auto pb = betti_numbers(pf, 0.5, 2);
  ok &= pb == want;
  rep.info(fmt("lat-lon 20x11 periodic (182 pts) eps=0.5 %s: betti %s, simplices %s", to_string(kRule).c_str(),
               format_betti(pb).c_str(), counts_text(pf.count_by_dim()).c_str()));

  rep.line(1, ok, "sphere Betti numbers [1,0,1]");
}

void msd_topology(Report& rep, bool long_run) {
  const std::vector<std::size_t> want{1, 0, 0, 0};
  bool ok = true;
  for (const auto& r : kMsdRuns) {
    if (r.eps > 0.5 && !long_run) {
      rep.info(fmt("%s eps=%.2f: skipped (run with --long)", r.label, r.eps));
      continue;
    }
    const auto t0 = Clock::now();
    try {
      const auto dm = distance_matrix(msd_cloud(r));
      if (long_run && r.eps > 0.5) {
        std::uint64_t total = 0;
        for (auto c : count_vr_simplices(dm, r.eps, 4, kRule)) total += c;
        rep.info(fmt("%s eps=%.2f: %llu simplices predicted (reference %ld)", r.label, r.eps,
                     static_cast<unsigned long long>(total), r.reference_simplices));
      }
      const auto f = build_vr(dm, r.eps, 4, kRule);
      const auto b = betti_numbers(f, r.eps, 3);
      const double s = seconds_since(t0);
      ok &= b == want && s < kMsdSeconds;
      rep.info(fmt("%s eps=%.2f: betti %s, %.2f s, %zu simplices (reference %ld)", r.label, r.eps,
                   format_betti(b).c_str(), s, f.size(), r.reference_simplices));
    } catch (const ResourceError& e) {
      ok = false;
      rep.info(fmt("%s eps=%.2f: %s", r.label, r.eps, e.what()));
    }
  }
  rep.line(2, ok, "MSD Betti numbers [1,0,0,0] at the reference eps");
}

// Smallest scale joining all points: the largest minimum-spanning-tree edge.
double connectivity_threshold(const DistanceMatrix& dm, EdgeRule rule) {
  const std::size_t n = dm.size();
  std::vector<std::tuple<double, std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(edge_scale(dm(i, j), rule), i, j);
  std::sort(edges.begin(), edges.end());
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& [w, i, j] : edges) {
    const auto a = root(i), b = root(j);
    if (a == b) continue;
    parent[a] = b;
    if (--components == 1) return w;
  }
  return 0.0;
}

void connectivity_thresholds(Report& rep) {
  bool ok = true;
  for (const auto& r : kMsdRuns) {
    const auto dm = distance_matrix(msd_cloud(r));
    const double star = connectivity_threshold(dm, kRule);
    // Distinct edge births in (star, reference]: at most one is tolerated.
    std::set<double> between;
    for (std::size_t i = 0; i < dm.size(); ++i)
      for (std::size_t j = i + 1; j < dm.size(); ++j) {
        const double b = edge_scale(dm(i, j), kRule);
        if (b > star && b <= r.eps) between.insert(b);
      }
    // Cross-check against the homology pipeline.
    const auto f = build_vr(dm, star, 1, kRule);
    const bool consistent = betti_numbers(f, star, 0)[0] == 1 &&
                            (f.prefix_size(star) == 0 || star == 0.0 ||
                             betti_numbers(f, std::nextafter(star, 0.0), 0)[0] > 1);
    const bool pass = consistent && star <= r.eps && between.size() <= 1;
    ok &= pass;
    rep.info(fmt("%s: beta0=1 from eps=%.6g (paper-2eps %.6g), reference %.2f, %zu distinct births in between", r.label,
                 star, connectivity_threshold(dm, EdgeRule::paper_2eps), r.eps, between.size()));
  }
  rep.line(3, ok, "smallest eps with beta0=1 within one distinct birth value of the reference eps");
}

Barcode msd_barcode(const MsdRun& r) {
  return intervals(build_vr(distance_matrix(msd_cloud(r)), kMsdBarcodeEps, kMsdBarcodeMaxDim, kRule));
}

void wasserstein_comparisons(Report& rep) {
  std::vector<Barcode> bars;
  for (const auto& r : kMsdRuns) bars.push_back(msd_barcode(r));
  bool ordered = true;
  for (double p : {1.0, 2.0}) {
    const double d1 = wasserstein_p(bars[0], bars[3], p);
    const double d2 = wasserstein_p(bars[1], bars[4], p);
    const double d3 = wasserstein_p(bars[2], bars[5], p);
    const bool ok = d1 > d2 && d2 > d3;
    ordered &= ok;
    rep.info(fmt("p=%g: d(w1,w1')=%.5g d(w2,w2')=%.5g d(w3,w3')=%.5g %s", p, d1, d2, d3,
                 ok ? "decreasing" : "NOT decreasing"));
  }
  rep.line(4, ordered, "(a) d(w1,w1') > d(w2,w2') > d(w3,w3') for p=1 and p=2");

  const auto sphere =
      intervals(build_vr(distance_matrix(gen_sphere_latlon(20, 10, SphereForm::standard, LatLonGrid::inclusive)), 0.5,
                         3, kRule));
  const auto fib = intervals(build_vr(distance_matrix(gen_fibonacci_sphere(500)), 0.25, 3, kRule));
  bool similar = true;
  for (double p : {1.0, 2.0}) {
    const double sf = wasserstein_p(sphere, fib, p);
    const double sm = wasserstein_p(sphere, bars[0], p);
    similar &= sf < sm;
    rep.info(fmt("p=%g: d(sphere,fib)=%.5g d(sphere,msd w1)=%.5g; dims 0,1 only: %.5g vs %.5g", p, sf, sm,
                 wasserstein_p(sphere, fib, p, {0, 1}), wasserstein_p(sphere, bars[0], p, {0, 1})));
  }
  rep.line(4, similar, "(b) d(sphere,fib) < d(sphere,msd)");
}

struct Check {
  bool ok = true;
  std::size_t cases = 0;
  void operator()(bool b) {
    ok &= b;
    ++cases;
  }
};

void property_suites(Report& rep) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20260101);
  bool all = true;
  auto summary = [&](const char* name, const Check& c) {
    all &= c.ok;
    rep.info(fmt("%-34s %s (%zu checks)", name, c.ok ? "ok" : "FAILED", c.cases));
  };

  Check dd;
  for (std::uint32_t mask = 1; mask < (1u << 6); ++mask) {
    std::vector<Vertex> v;
    for (Vertex i = 0; i < 6; ++i)
      if (mask >> i & 1) v.push_back(i);
    dd(boundary_squared_is_zero(Simplex(v)).empty());
  }
  summary("boundary of boundary, dim <= 5", dd);

  Check euler, components, dense, scan, curve;
  for (int t = 0; t < 200; ++t) {
    const auto c = oracle::random_cloud(rng, 4 + t % 27, 3);
    const auto f = build_vr(distance_matrix(c), 0.35, 3);
    const auto pairing = reduce(build_boundary_matrix(f));
    std::set<double> births;
    for (std::size_t i = 0; i < f.size(); ++i) births.insert(f.birth(i));
    const auto bar = intervals(f, pairing);
    for (double e : births) {
      const auto betti = skeleton_betti_numbers(f, pairing, e);
      std::vector<long> cells(4, 0);
      for (std::size_t i = 0; i < f.prefix_size(e); ++i) ++cells[static_cast<std::size_t>(f.dim(i))];
      long lhs = 0, rhs = 0;
      for (std::size_t k = 0; k < 4; ++k) {
        lhs += (k % 2 ? -1 : 1) * cells[k];
        rhs += (k % 2 ? -1 : 1) * static_cast<long>(betti[k]);
      }
      euler(lhs == rhs);
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t i = 0; i < f.prefix_size(e); ++i)
        if (f.dim(i) == 1) edges.emplace_back(f.vertices(i)[0], f.vertices(i)[1]);
      components(betti_numbers(f, pairing, e, 0)[0] == oracle::union_find_components(c.size(), edges));
      curve(betti_curve(bar, e, 2) == betti_numbers(f, pairing, e, 2));
    }
  }
  for (int t = 0; t < 200; ++t) {
    const auto c = oracle::random_cloud(rng, 4 + t % 7, 1 + t % 4);
    const auto f = build_vr(distance_matrix(c), 0.6, 3);
    std::set<double> births;
    for (std::size_t i = 0; i < f.size(); ++i) births.insert(f.birth(i));
    for (double e : births) {
      std::vector<std::vector<std::uint32_t>> prefix;
      for (std::size_t i = 0; i < f.prefix_size(e); ++i) prefix.emplace_back(f.vertices(i).begin(), f.vertices(i).end());
      const auto want = oracle::dense_betti(prefix, 3);
      const auto got = betti_numbers(f, e, 2);
      dense(std::equal(got.begin(), got.end(), want.begin()));
    }
  }
  for (int t = 0; t < 100; ++t) {
    const auto c = oracle::random_cloud(rng, 2 + t % 11, 1 + t % 3);
    const int d = std::min(3, static_cast<int>(c.size()) - 1);
    const auto f = build_vr(distance_matrix(c), 0.7, d, t % 2 ? EdgeRule::paper_2eps : EdgeRule::diameter_eps);
    const auto brute = oracle::subset_scan(c, 0.7, d, t % 2 == 1);
    bool same = brute.size() == f.size();
    for (const auto& s : brute) {
      const auto pos = f.find(s.vertices);
      same &= pos.has_value() && std::abs(f.birth(*pos) - s.birth) <= 1e-15;
    }
    scan(same);
  }
  summary("Euler characteristic", euler);
  summary("beta0 = union-find components", components);
  summary("Betti = dense GF(2) elimination", dense);
  summary("VR = brute-force subset scan", scan);
  summary("betti_curve = betti_numbers", curve);

  Check brute, axioms;
  std::uniform_int_distribution<int> grid(0, 16);
  std::uniform_int_distribution<std::size_t> count(0, 6);
  auto dyadic = [&](std::size_t n, int dim) {
    std::vector<PersistenceInterval> v;
    for (std::size_t i = 0; i < n; ++i) {
      const double b = grid(rng) / 8.0;
      v.push_back({dim, b, b + grid(rng) / 8.0});
    }
    return v;
  };
  for (int t = 0; t < 500; ++t) {
    const auto l = dyadic(count(rng), 0), r = dyadic(count(rng), 0);
    for (double p : {1.0, 2.0}) brute(match_dimension(l, r, p).cost == oracle::brute_wasserstein_sum(l, r, p));
  }
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> size(0, 12);
  auto random_barcode = [&] {
    Barcode b;
    const std::size_t n = size(rng);
    for (std::size_t i = 0; i < n; ++i) {
      const double s = u(rng);
      b.intervals.push_back({static_cast<int>(i % 2), s, s + u(rng)});
    }
    return b;
  };
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_barcode(), b = random_barcode(), c = random_barcode();
    const double ab = wasserstein_p(a, b), ba = wasserstein_p(b, a);
    axioms(ab == ba && wasserstein_p(a, a) == 0.0 &&
           wasserstein_p(a, c) <= ab + wasserstein_p(b, c) + kTriangleTol);
  }
  summary("Wasserstein = exhaustive matching", brute);
  summary("metric axioms, 1000 triples", axioms);

  Check toeplitz;
  for (double k : {1.0, 10000.0, 3.5e6}) {
    for (double m : {1.0, 10.0, 0.25}) {
      MsdConfig cfg;
      cfg.masses = {m, m, m};
      cfg.stiffness = {k, k, k, k};
      const auto r = natural_frequencies(cfg, 300.0, 0.0, 0.0);
      const double s2 = std::sqrt(2.0), base = k / m;
      const double want[3] = {(2.0 - s2) * base, 2.0 * base, (2.0 + s2) * base};
      for (int i = 0; i < 3; ++i) toeplitz(std::abs(r.omega_squared[i] - want[i]) <= kToeplitzRelTol * want[i]);
    }
  }
  summary("Toeplitz eigenvalues", toeplitz);

  const double s = seconds_since(t0);
  rep.line(5, all && s < kPropertySeconds, fmt("property suites (%.1f s)", s));
}

void known_shapes(Report& rep) {
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < 20; ++i) {
    const double t = 2.0 * std::numbers::pi * i / 20.0;
    rows.push_back({std::cos(t), std::sin(t)});
  }
  const auto circle = intervals(build_vr(distance_matrix(PointCloud(rows)), 1.0, 2));
  std::size_t long_bars = 0;
  for (const auto& iv : circle.of_dim(1)) long_bars += iv.length() > kCircleBarLength;
  rep.info(fmt("20-point circle: %zu dim-1 bars, %zu longer than %.1f", circle.of_dim(1).size(), long_bars,
               kCircleBarLength));

  const auto square = intervals(build_vr(
      distance_matrix(PointCloud(std::vector<std::vector<double>>{{0, 0}, {1, 0}, {1, 1}, {0, 1}})), 1.0, 2));
  const auto h1 = square.of_dim(1);
  const bool square_ok = h1.size() == 1 && h1[0].birth == 0.5 && h1[0].death == std::sqrt(2.0) / 2.0;
  rep.info(square_ok ? "unit square: dim-1 bar [0.5, sqrt(2)/2)" : "unit square: unexpected dim-1 bars");
  rep.line(6, long_bars == 1 && square_ok, "known-shape bars");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  bool long_run = false;
  std::vector<int> xfail;
  app.add_flag("--long", long_run, "include the omega1 run at eps = 0.77");
  app.add_option("--xfail", xfail, "criteria whose failure is known and documented");
  CLI11_PARSE(app, argc, argv);

  Report rep;
  try {
    sphere_topology(rep);
    msd_topology(rep, long_run);
    connectivity_thresholds(rep);
    wasserstein_comparisons(rep);
    property_suites(rep);
    known_shapes(rep);
  } catch (const std::exception& e) {
    std::printf("ERROR  %s\n", e.what());
    return 2;
  }

  const std::set<int> expected(xfail.begin(), xfail.end());
  for (int id : rep.failed)
    if (expected.count(id)) std::printf("note: criterion %d failed as expected\n", id);
  for (int id : expected)
    if (!rep.failed.count(id)) std::printf("note: criterion %d was expected to fail but passed\n", id);
  return rep.failed == expected ? 0 : 1;
}
