#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "vrph/homology.hpp"
#include "vrph/vr_complex.hpp"

namespace vrph {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Result of reducing a boundary matrix: (birth column, death column) pairs
/// sorted by death, plus the columns that start classes which never die.
struct Pairing {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<std::uint32_t> unpaired;

  friend bool operator==(const Pairing&, const Pairing&) = default;
};

/// Standard left-to-right column reduction over GF(2).
Pairing reduce(const BoundaryMatrix& bm);

/// Reduction with clearing: dimensions are processed from the top down and
/// any column already known to be a pivot row is zeroed without work. The
/// pairing is identical to reduce().
Pairing reduce_with_clearing(const BoundaryMatrix& bm);

struct PersistenceInterval {
  int dim = 0;
  double birth = 0.0;
  double death = kInfinity;

  bool infinite() const { return death == kInfinity; }
  double length() const { return death - birth; }
  friend bool operator==(const PersistenceInterval&, const PersistenceInterval&) = default;
};

struct Barcode {
  std::vector<PersistenceInterval> intervals;
  double eps_max = 0.0;
  double min_length = 0.0;
  /// Highest homology dimension the barcode speaks for (-1 when unknown).
  int max_homology_dim = -1;

  /// Intervals of one dimension, in stored order.
  std::vector<PersistenceInterval> of_dim(int k) const;
  int top_dim() const;
};

struct IntervalOptions {
  double min_length = 0.0;  // drop finite intervals with death - birth <= min_length
  bool keep_zero = false;   // keep birth == death intervals when min_length == 0
};

/// Persistence intervals of dimensions 0..f.max_dim()-1, sorted by
/// (dim, birth, death). Top-dimensional classes are left out because the
/// filtration holds no simplices that could kill them.
Barcode intervals(const Filtration& f, const IntervalOptions& options = {});
Barcode intervals(const Filtration& f, const Pairing& pairing, const IntervalOptions& options = {});

/// Number of intervals per dimension with birth <= eps < death. Covers
/// dimensions 0..max_k; max_k = -1 means b.top_dim().
std::vector<std::size_t> betti_curve(const Barcode& b, double eps, int max_k = -1);

/// Barcode CSV: header `dim,birth,death`, 9 significant digits, `inf` for
/// infinite deaths.
void write_barcode_csv(std::ostream& out, const Barcode& b);
void write_barcode_csv_file(const std::string& path, const Barcode& b);
Barcode read_barcode_csv(std::istream& in);
Barcode read_barcode_csv_file(const std::string& path);

std::string format_significant(double value, int digits);

}  // namespace vrph
