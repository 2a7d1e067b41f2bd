#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "vrph/geometry.hpp"
#include "vrph/linalg.hpp"

namespace vrph {

// ---------------------------------------------------------------------------
// Spheres

enum class SphereForm {
  standard,  // (cos u sin v, sin u sin v, cos v)
  literal,   // (cos u sin v, sin u cos v, cos v); not on the unit sphere in general
};

enum class LatLonGrid {
  /// u = 2*pi*a/n_u, v = pi*b/(n_v-1); each pole emitted once.
  periodic,
  /// u and v both sampled with endpoints included, n_u*n_v points, no
  /// merging. The seam u = 0 / 2*pi and the poles repeat.
  inclusive,
};

/// Latitude-longitude sampling of the unit sphere. Throws InputError unless
/// n_u >= 3 and n_v >= 2.
PointCloud gen_sphere_latlon(std::size_t n_u, std::size_t n_v, SphereForm form = SphereForm::standard,
                             LatLonGrid grid = LatLonGrid::periodic);

/// Fibonacci spiral on the unit sphere: theta_j = j*pi*(1+sqrt 5) and
/// cos(phi_j) = 1 - (2j+1)/n_p.
PointCloud gen_fibonacci_sphere(std::size_t n_p);

// ---------------------------------------------------------------------------
// 3DOF mass-spring system

/// What to do at grid nodes where (1 - alpha*T)(1 - D) < 0, i.e. where the
/// second spring's stiffness turns negative.
enum class NegativeStiffness {
  reject,   // refuse the configuration (InputError)
  clamp,    // treat the second spring as fully degraded: factor = 0
  modulus,  // keep the negative stiffness; omega = |sqrt(lambda)| = sqrt(|lambda|)
};

std::string to_string(NegativeStiffness policy);
NegativeStiffness parse_negative_stiffness(const std::string& name);

struct GridAxis {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t divisions = 2;  // number of grid values, endpoints included

  double value(std::size_t i) const;
};

struct MsdConfig {
  std::array<double, 3> masses{10.0, 10.0, 10.0};
  std::array<double, 4> stiffness{10000.0, 10000.0, 10000.0, 10000.0};
  GridAxis temperature{250.0, 500.0, 7};
  GridAxis expansion{0.0, 0.005, 6};
  GridAxis damage{0.0, 1.0, 6};
  int mode_index = 1;  // 1-based; 1 is the lowest natural frequency
  NegativeStiffness negative_stiffness = NegativeStiffness::modulus;

  /// Throws InputError if any field is out of range. Under
  /// NegativeStiffness::reject, also checks every grid node's factor.
  void validate() const;
  std::size_t grid_size() const {
    return temperature.divisions * expansion.divisions * damage.divisions;
  }
};

/// Reads `name = value` lines (# starts a comment). Unknown keys are errors.
/// Keys: m1 m2 m3 k1 k2 k3 k4 T_min T_max T_divisions alpha_min alpha_max
/// alpha_divisions D_min D_max D_divisions mode negative_stiffness.
MsdConfig parse_msd_config(std::istream& in);
MsdConfig read_msd_config_file(const std::string& path);
void write_msd_config(std::ostream& out, const MsdConfig& cfg);

struct ModalResult {
  /// Eigenvalues of M^-1 K, ascending (rad^2/s^2). Non-negative whenever the
  /// stiffness factor is; only the modulus policy can yield negative ones.
  Vector3 omega_squared;
  Vector3 omega;  // sqrt(|omega_squared|), rad/s
};

/// (1 - alpha*T)(1 - D), the multiplier applied to k2.
double stiffness_factor(double temperature, double alpha, double damage);

/// Tridiagonal stiffness matrix with k2 scaled by the stiffness factor.
/// Throws InputError when the factor is negative.
Matrix3 stiffness_matrix(const MsdConfig& cfg, double temperature, double alpha, double damage);

/// Eigenvalues of M^-1 K via Jacobi on M^-1/2 K M^-1/2. A negative factor is
/// handled according to cfg.negative_stiffness. Throws ComputationError if the
/// solver fails or an eigenpair residual exceeds 1e-9 * |K|.
ModalResult natural_frequencies(const MsdConfig& cfg, double temperature, double alpha, double damage);

/// One 4D point (T, alpha, D, omega_mode) per grid node, row-major over
/// (T, alpha, D) with D fastest, then rescale_unit_box.
PointCloud gen_msd_manifold(const MsdConfig& cfg);

/// Same grid before rescaling.
PointCloud gen_msd_manifold_raw(const MsdConfig& cfg);

}  // namespace vrph
