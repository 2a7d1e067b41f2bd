#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace vrph {

/// A finite sample of points in R^d, stored row-major.
class PointCloud {
 public:
  PointCloud() = default;
  /// Throws InputError on ragged rows, an empty list, or zero dimension.
  explicit PointCloud(const std::vector<std::vector<double>>& rows);
  PointCloud(std::size_t dim, std::vector<double> flat);

  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return coords_.empty(); }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  std::span<double> point(std::size_t i) {
    return {coords_.data() + i * dim_, dim_};
  }
  const std::vector<double>& flat() const { return coords_; }

  friend bool operator==(const PointCloud&, const PointCloud&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

/// Dense symmetric matrix of pairwise distances with zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double d) {
    entries_[i * n_ + j] = d;
    entries_[j * n_ + i] = d;
  }
  std::span<const double> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }

 private:
  std::size_t n_ = 0;
  std::vector<double> entries_;
};

double euclidean_distance(std::span<const double> p, std::span<const double> q);

/// Full pairwise Euclidean distance matrix. Rows are computed on up to
/// `threads` workers; the result does not depend on the thread count.
DistanceMatrix distance_matrix(const PointCloud& cloud, unsigned threads = 1);

/// Divides every coordinate by the largest absolute value of its dimension.
/// A dimension that is identically zero is left as is.
PointCloud rescale_unit_box(const PointCloud& cloud);

/// Point-cloud CSV: one point per line, comma-separated decimals, no header.
PointCloud read_point_csv(std::istream& in);
PointCloud read_point_csv_file(const std::string& path);
void write_point_csv(std::ostream& out, const PointCloud& cloud);
void write_point_csv_file(const std::string& path, const PointCloud& cloud);

}  // namespace vrph
