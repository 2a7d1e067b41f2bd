#include "vrph/generators.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "vrph/error.hpp"

namespace vrph {

PointCloud gen_sphere_latlon(std::size_t n_u, std::size_t n_v, SphereForm form, LatLonGrid grid) {
  if (n_u < 3 || n_v < 2) throw InputError("lat-lon sphere needs n_u >= 3 and n_v >= 2");
  const double pi = std::numbers::pi;
  std::vector<double> flat;
  auto emit = [&](double u, double v) {
    const double y = form == SphereForm::standard ? std::sin(u) * std::sin(v) : std::sin(u) * std::cos(v);
    flat.insert(flat.end(), {std::cos(u) * std::sin(v), y, std::cos(v)});
  };

  if (grid == LatLonGrid::inclusive) {
    for (std::size_t b = 0; b < n_v; ++b) {
      const double v = pi * static_cast<double>(b) / static_cast<double>(n_v - 1);
      for (std::size_t a = 0; a < n_u; ++a) emit(2.0 * pi * static_cast<double>(a) / static_cast<double>(n_u - 1), v);
    }
    return PointCloud(3, std::move(flat));
  }

  for (std::size_t b = 0; b < n_v; ++b) {
    const bool pole = b == 0 || b == n_v - 1;
    if (pole && form == SphereForm::standard) {
      // Every u collapses onto the pole; emit it once and exactly.
      flat.insert(flat.end(), {0.0, 0.0, b == 0 ? 1.0 : -1.0});
      continue;
    }
    const double v = pi * static_cast<double>(b) / static_cast<double>(n_v - 1);
    for (std::size_t a = 0; a < n_u; ++a) emit(2.0 * pi * static_cast<double>(a) / static_cast<double>(n_u), v);
  }
  return PointCloud(3, std::move(flat));
}

PointCloud gen_fibonacci_sphere(std::size_t n_p) {
  if (n_p == 0) throw InputError("Fibonacci sphere needs at least one point");
  const double step = std::numbers::pi * (1.0 + std::sqrt(5.0));
  std::vector<double> flat;
  flat.reserve(3 * n_p);
  for (std::size_t j = 0; j < n_p; ++j) {
    const double theta = static_cast<double>(j) * step;
    const double cos_phi = 1.0 - (2.0 * static_cast<double>(j) + 1.0) / static_cast<double>(n_p);
    const double sin_phi = std::sqrt(std::max(0.0, 1.0 - cos_phi * cos_phi));
    flat.insert(flat.end(), {std::cos(theta) * sin_phi, std::sin(theta) * sin_phi, cos_phi});
  }
  return PointCloud(3, std::move(flat));
}

double GridAxis::value(std::size_t i) const {
  if (i + 1 == divisions) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(divisions - 1);
}

void MsdConfig::validate() const {
  for (double m : masses)
    if (!(m > 0.0)) throw InputError("masses must be positive");
  for (double k : stiffness)
    if (!(k >= 0.0)) throw InputError("stiffnesses must be non-negative");
  for (const GridAxis* axis : {&temperature, &expansion, &damage}) {
    if (axis->divisions < 2) throw InputError("grid division counts must be >= 2");
    if (!(axis->lo <= axis->hi)) throw InputError("grid axis range is empty");
  }
  if (mode_index < 1 || mode_index > 3) throw InputError("mode index must be 1, 2 or 3");
  if (negative_stiffness == NegativeStiffness::reject) {
    for (std::size_t a = 0; a < temperature.divisions; ++a)
      for (std::size_t b = 0; b < expansion.divisions; ++b)
        for (std::size_t c = 0; c < damage.divisions; ++c)
          if (stiffness_factor(temperature.value(a), expansion.value(b), damage.value(c)) < 0.0)
            throw InputError("effective k2 is negative on part of the grid; choose negative_stiffness = clamp or modulus");
  }
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string to_string(NegativeStiffness policy) {
  switch (policy) {
    case NegativeStiffness::reject: return "reject";
    case NegativeStiffness::clamp: return "clamp";
    case NegativeStiffness::modulus: return "modulus";
  }
  return "?";
}

NegativeStiffness parse_negative_stiffness(const std::string& name) {
  if (name == "reject") return NegativeStiffness::reject;
  if (name == "clamp") return NegativeStiffness::clamp;
  if (name == "modulus") return NegativeStiffness::modulus;
  throw InputError("negative_stiffness must be reject, clamp or modulus (got '" + name + "')");
}

MsdConfig parse_msd_config(std::istream& in) {
  MsdConfig cfg;
  auto as_count = [](double v) { return static_cast<std::size_t>(v); };
  const std::map<std::string, std::function<void(double)>> numeric{
      {"m1", [&](double v) { cfg.masses[0] = v; }},
      {"m2", [&](double v) { cfg.masses[1] = v; }},
      {"m3", [&](double v) { cfg.masses[2] = v; }},
      {"k1", [&](double v) { cfg.stiffness[0] = v; }},
      {"k2", [&](double v) { cfg.stiffness[1] = v; }},
      {"k3", [&](double v) { cfg.stiffness[2] = v; }},
      {"k4", [&](double v) { cfg.stiffness[3] = v; }},
      {"T_min", [&](double v) { cfg.temperature.lo = v; }},
      {"T_max", [&](double v) { cfg.temperature.hi = v; }},
      {"T_divisions", [&](double v) { cfg.temperature.divisions = as_count(v); }},
      {"alpha_min", [&](double v) { cfg.expansion.lo = v; }},
      {"alpha_max", [&](double v) { cfg.expansion.hi = v; }},
      {"alpha_divisions", [&](double v) { cfg.expansion.divisions = as_count(v); }},
      {"D_min", [&](double v) { cfg.damage.lo = v; }},
      {"D_max", [&](double v) { cfg.damage.hi = v; }},
      {"D_divisions", [&](double v) { cfg.damage.divisions = as_count(v); }},
      {"mode", [&](double v) { cfg.mode_index = static_cast<int>(v); }},
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "config line " + std::to_string(line_no);
    if (eq == std::string::npos) throw InputError(where + ": expected 'name = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "negative_stiffness") {
      try {
        cfg.negative_stiffness = parse_negative_stiffness(value);
      } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
      }
      continue;
    }
    const auto it = numeric.find(key);
    if (it == numeric.end()) throw InputError(where + ": unknown key '" + key + "'");
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw InputError(where + ": bad number '" + value + "'");
    }
    if (key.ends_with("_divisions") || key == "mode") {
      if (v != std::floor(v) || v < 0) throw InputError(where + ": '" + key + "' must be a non-negative integer");
    }
    it->second(v);
  }
  cfg.validate();
  return cfg;
}

MsdConfig read_msd_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return parse_msd_config(in);
}

void write_msd_config(std::ostream& out, const MsdConfig& cfg) {
  out.precision(17);
  for (int i = 0; i < 3; ++i) out << 'm' << i + 1 << " = " << cfg.masses[i] << '\n';
  for (int i = 0; i < 4; ++i) out << 'k' << i + 1 << " = " << cfg.stiffness[i] << '\n';
  auto axis = [&](const char* name, const GridAxis& a) {
    out << name << "_min = " << a.lo << '\n' << name << "_max = " << a.hi << '\n'
        << name << "_divisions = " << a.divisions << '\n';
  };
  axis("T", cfg.temperature);
  axis("alpha", cfg.expansion);
  axis("D", cfg.damage);
  out << "mode = " << cfg.mode_index << '\n';
  out << "negative_stiffness = " << to_string(cfg.negative_stiffness) << '\n';
}

double stiffness_factor(double temperature, double alpha, double damage) {
  return (1.0 - alpha * temperature) * (1.0 - damage);
}

namespace {

Matrix3 stiffness_from_factor(const MsdConfig& cfg, double factor) {
  const auto [k1, k2, k3, k4] = cfg.stiffness;
  const double k2e = k2 * factor;
  return Matrix3{{{k1 + k2e, -k2e, 0.0}, {-k2e, k2e + k3, -k3}, {0.0, -k3, k3 + k4}}};
}

}  // namespace

Matrix3 stiffness_matrix(const MsdConfig& cfg, double temperature, double alpha, double damage) {
  const double factor = stiffness_factor(temperature, alpha, damage);
  if (factor < 0.0) throw InputError("negative effective stiffness (1 - alpha*T)(1 - D) < 0");
  return stiffness_from_factor(cfg, factor);
}

ModalResult natural_frequencies(const MsdConfig& cfg, double temperature, double alpha, double damage) {
  double factor = stiffness_factor(temperature, alpha, damage);
  if (factor < 0.0) {
    if (cfg.negative_stiffness == NegativeStiffness::reject)
      throw InputError("negative effective stiffness (1 - alpha*T)(1 - D) < 0");
    if (cfg.negative_stiffness == NegativeStiffness::clamp) factor = 0.0;
  }
  const Matrix3 k = stiffness_from_factor(cfg, factor);

  Vector3 inv_sqrt_m{};
  for (int i = 0; i < 3; ++i) inv_sqrt_m[i] = 1.0 / std::sqrt(cfg.masses[i]);
  Matrix3 sym{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sym[i][j] = inv_sqrt_m[i] * k[i][j] * inv_sqrt_m[j];
  // Products commute exactly, so the scaled matrix is bit-symmetric.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) sym[j][i] = sym[i][j];

  const SymmetricEigen3 eig = jacobi_eigen(sym);

  Matrix3 dynamic{};  // M^-1 K
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) dynamic[i][j] = k[i][j] / cfg.masses[i];
  const double tolerance = 1e-9 * frobenius_norm(k);

  ModalResult out;
  for (int i = 0; i < 3; ++i) {
    const double lambda = eig.values[i];
    Vector3 x{};
    double norm = 0.0;
    for (int c = 0; c < 3; ++c) {
      x[c] = inv_sqrt_m[c] * eig.vectors[i][c];
      norm += x[c] * x[c];
    }
    norm = std::sqrt(norm);
    for (double& c : x) c /= norm;
    const Vector3 ax = multiply(dynamic, x);
    double residual = 0.0;
    for (int c = 0; c < 3; ++c) residual += (ax[c] - lambda * x[c]) * (ax[c] - lambda * x[c]);
    if (std::sqrt(residual) > tolerance) throw ComputationError("eigenpair residual above tolerance");
    if (factor >= 0.0) {
      // K is positive semidefinite here; round-off can still push a zero eigenvalue below 0.
      if (lambda < -tolerance) throw ComputationError("stiffness matrix is not positive semidefinite");
      out.omega_squared[i] = std::max(0.0, lambda);
    } else {
      out.omega_squared[i] = lambda;
    }
    out.omega[i] = std::sqrt(std::abs(out.omega_squared[i]));
  }
  return out;
}

PointCloud gen_msd_manifold_raw(const MsdConfig& cfg) {
  cfg.validate();
  std::vector<double> flat;
  flat.reserve(4 * cfg.grid_size());
  for (std::size_t a = 0; a < cfg.temperature.divisions; ++a) {
    const double t = cfg.temperature.value(a);
    for (std::size_t b = 0; b < cfg.expansion.divisions; ++b) {
      const double alpha = cfg.expansion.value(b);
      for (std::size_t c = 0; c < cfg.damage.divisions; ++c) {
        const double d = cfg.damage.value(c);
        const ModalResult modes = natural_frequencies(cfg, t, alpha, d);
        flat.insert(flat.end(), {t, alpha, d, modes.omega[cfg.mode_index - 1]});
      }
    }
  }
  return PointCloud(4, std::move(flat));
}

PointCloud gen_msd_manifold(const MsdConfig& cfg) { return rescale_unit_box(gen_msd_manifold_raw(cfg)); }

}  // namespace vrph
