#include "vrph/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vrph/error.hpp"
#include "vrph/generators.hpp"
#include "vrph/geometry.hpp"
#include "vrph/homology.hpp"
#include "vrph/persistence.hpp"
#include "vrph/svg.hpp"
#include "vrph/vr_complex.hpp"
#include "vrph/wasserstein.hpp"

namespace vrph {

std::string format_distance_line(double distance) {
  if (std::isinf(distance)) return "d_Wp = inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "d_Wp = %#.5g", distance);
  return buf;
}

std::string format_betti(const std::vector<std::size_t>& betti) {
  std::string s = "[";
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(betti[i]);
  }
  return s + "]";
}

namespace {

struct VrArgs {
  std::string input;
  double eps = 0.0;
  int max_dim = 3;
  std::string edge_rule = "paper-2eps";
  std::uint64_t max_simplices = kDefaultMaxSimplices;
};

void add_vr_options(CLI::App* cmd, VrArgs& a, bool with_max_dim) {
  cmd->add_option("input", a.input, "point-cloud CSV")->required();
  cmd->add_option("--eps", a.eps, "largest scale eps included in the complex")->required()->check(CLI::PositiveNumber);
  if (with_max_dim) cmd->add_option("--max-dim", a.max_dim, "simplex dimension cap")->check(CLI::NonNegativeNumber);
  cmd->add_option("--edge-rule", a.edge_rule, "paper-2eps (d <= 2 eps) or diameter-eps (d <= eps)")
      ->check(CLI::IsMember({"paper-2eps", "diameter-eps"}));
  cmd->add_option("--max-simplices", a.max_simplices, "simplex budget checked before allocation");
}

Filtration build_from_args(const VrArgs& a, int max_dim, unsigned threads) {
  const PointCloud cloud = read_point_csv_file(a.input);
  const DistanceMatrix dm = distance_matrix(cloud, threads);
  if (static_cast<std::size_t>(max_dim) > cloud.size() - 1)
    throw InputError("--max-dim must not exceed the number of points minus one");
  return build_vr(dm, a.eps, max_dim, parse_edge_rule(a.edge_rule), a.max_simplices);
}

bool looks_like_barcode(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line == "dim,birth,death";
}

/// Writes through `out_path` when given, else to `fallback`.
template <class Write>
void emit(const std::string& out_path, std::ostream& fallback, Write write) {
  if (out_path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + out_path + "' for writing");
  write(file);
  if (!file) throw IoError("write to '" + out_path + "' failed");
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  if (text.empty()) return dims;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      std::size_t used = 0;
      const int d = std::stoi(field, &used);
      if (used != field.size() || d < 0) throw std::invalid_argument(field);
      dims.push_back(d);
    } catch (const std::exception&) {
      throw InputError("--dims expects a comma-separated list of non-negative integers");
    }
  }
  return dims;
}

unsigned default_threads() {
  if (const char* env = std::getenv("VRPH_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vietoris-Rips persistent homology toolkit", "vrph"};
  app.require_subcommand(1);
  app.fallthrough();  // subcommands inherit this, so --threads works after them too
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "worker threads (default $VRPH_THREADS or 1)")->check(CLI::PositiveNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a point cloud");
  gen->require_subcommand(1);
  std::string gen_out;
  std::size_t n_u = 20, n_v = 11, n_p = 500;
  std::string form = "standard", grid = "periodic";
  auto* sphere = gen->add_subcommand("sphere", "latitude-longitude sphere");
  sphere->add_option("--nu", n_u, "samples in u (longitude)");
  sphere->add_option("--nv", n_v, "samples in v (latitude) including both poles");
  sphere->add_option("--form", form, "standard or literal y-component")->check(CLI::IsMember({"standard", "literal"}));
  sphere->add_option("--grid", grid, "periodic (poles merged) or inclusive (endpoints repeated)")
      ->check(CLI::IsMember({"periodic", "inclusive"}));
  sphere->add_option("--out", gen_out, "output CSV (default stdout)");
  auto* fib = gen->add_subcommand("fibsphere", "Fibonacci sphere");
  fib->add_option("--n", n_p, "number of points");
  fib->add_option("--out", gen_out, "output CSV (default stdout)");
  auto* msd = gen->add_subcommand("msd", "3DOF mass-spring natural-frequency manifold");
  std::string config_path;
  int mode = 0;
  bool raw = false;
  msd->add_option("--config", config_path, "MsdConfig file (name = value); defaults to the shipped values");
  msd->add_option("--mode", mode, "natural frequency index 1..3 (overrides the config)")->check(CLI::Range(1, 3));
  msd->add_flag("--raw", raw, "skip the per-dimension rescaling");
  msd->add_option("--out", gen_out, "output CSV (default stdout)");

  // vr
  VrArgs vr_args;
  vr_args.max_dim = 2;
  auto* vr = app.add_subcommand("vr", "build a Vietoris-Rips filtration and report simplex counts");
  add_vr_options(vr, vr_args, true);

  // betti
  VrArgs betti_args;
  int max_k = -1;
  auto* betti = app.add_subcommand("betti", "Betti numbers at a fixed scale");
  betti->add_option("input", betti_args.input, "point-cloud CSV or barcode CSV")->required();
  betti->add_option("--eps", betti_args.eps, "scale eps")->required()->check(CLI::NonNegativeNumber);
  betti->add_option("--max-k", max_k, "highest Betti number reported (point clouds default to 2)")
      ->check(CLI::NonNegativeNumber);
  betti->add_option("--edge-rule", betti_args.edge_rule, "paper-2eps or diameter-eps")
      ->check(CLI::IsMember({"paper-2eps", "diameter-eps"}));
  betti->add_option("--max-simplices", betti_args.max_simplices, "simplex budget checked before allocation");

  // persist
  VrArgs persist_args;
  double min_length = 0.0;
  bool keep_zero = false;
  std::string persist_out;
  auto* persist = app.add_subcommand("persist", "persistence barcode of a point cloud");
  add_vr_options(persist, persist_args, true);
  persist->add_option("--min-length", min_length, "drop finite intervals of length <= l")
      ->check(CLI::NonNegativeNumber);
  persist->add_flag("--keep-zero", keep_zero, "keep zero-length intervals");
  persist->add_option("--out", persist_out, "barcode CSV (default stdout)");

  // compare
  std::string left_path, right_path, dims_text;
  double p = 2.0;
  auto* compare = app.add_subcommand("compare", "p-Wasserstein distance between two barcode CSVs");
  compare->add_option("left", left_path)->required();
  compare->add_option("right", right_path)->required();
  compare->add_option("--p", p, "exponent p >= 1")->check(CLI::Range(1.0, 1e9));
  compare->add_option("--dims", dims_text, "comma-separated homology dimensions (default all)");

  // plot
  auto* plot = app.add_subcommand("plot", "render a barcode CSV as SVG");
  plot->require_subcommand(1);
  std::string plot_in, plot_out;
  auto* plot_bar = plot->add_subcommand("barcode", "barcode bars");
  auto* plot_diag = plot->add_subcommand("diagram", "birth-death diagram");
  for (auto* cmd : {plot_bar, plot_diag}) {
    cmd->add_option("input", plot_in, "barcode CSV")->required();
    cmd->add_option("--out", plot_out, "output SVG")->required();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  try {
    if (gen->parsed()) {
      PointCloud cloud;
      if (sphere->parsed()) {
        cloud = gen_sphere_latlon(n_u, n_v, form == "standard" ? SphereForm::standard : SphereForm::literal,
                                  grid == "periodic" ? LatLonGrid::periodic : LatLonGrid::inclusive);
      } else if (fib->parsed()) {
        cloud = gen_fibonacci_sphere(n_p);
      } else {
        MsdConfig cfg = config_path.empty() ? MsdConfig{} : read_msd_config_file(config_path);
        if (mode != 0) cfg.mode_index = mode;
        cloud = raw ? gen_msd_manifold_raw(cfg) : gen_msd_manifold(cfg);
      }
      emit(gen_out, out, [&](std::ostream& o) { write_point_csv(o, cloud); });
    } else if (vr->parsed()) {
      const Filtration f = build_from_args(vr_args, vr_args.max_dim, threads);
      const auto counts = f.count_by_dim();
      std::uint64_t total = 0;
      for (std::size_t k = 0; k < counts.size(); ++k) {
        out << "dim " << k << ": " << counts[k] << '\n';
        total += counts[k];
      }
      out << "total: " << total << '\n';
    } else if (betti->parsed()) {
      if (looks_like_barcode(betti_args.input)) {
        out << format_betti(betti_curve(read_barcode_csv_file(betti_args.input), betti_args.eps, max_k)) << '\n';
      } else {
        if (betti_args.eps <= 0.0) throw InputError("--eps must be positive for a point cloud");
        const int k = max_k < 0 ? 2 : max_k;
        const Filtration f = build_from_args(betti_args, k + 1, threads);
        const Pairing pairing = reduce_with_clearing(build_boundary_matrix(f, threads));
        out << format_betti(betti_numbers(f, pairing, betti_args.eps, k)) << '\n';
      }
    } else if (persist->parsed()) {
      const Filtration f = build_from_args(persist_args, persist_args.max_dim, threads);
      const Pairing pairing = reduce_with_clearing(build_boundary_matrix(f, threads));
      const Barcode b = intervals(f, pairing, IntervalOptions{min_length, keep_zero});
      emit(persist_out, out, [&](std::ostream& o) { write_barcode_csv(o, b); });
    } else if (compare->parsed()) {
      const Barcode a = read_barcode_csv_file(left_path);
      const Barcode b = read_barcode_csv_file(right_path);
      out << format_distance_line(wasserstein_p(a, b, p, parse_dims(dims_text))) << '\n';
    } else if (plot->parsed()) {
      const Barcode b = read_barcode_csv_file(plot_in);
      if (plot_bar->parsed()) render_barcode_svg(plot_out, b);
      else render_diagram_svg(plot_out, b);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitCompute;
  } catch (const ComputationError& e) {
    err << "computation error: " << e.what() << '\n';
    return kExitCompute;
  } catch (const std::bad_alloc&) {
    err << "resource error: out of memory\n";
    return kExitCompute;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCompute;
  }
  return kExitOk;
}

}  // namespace vrph
