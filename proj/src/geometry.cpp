#include "vrph/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "vrph/error.hpp"

namespace vrph {

PointCloud::PointCloud(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw InputError("point cloud must contain at least one point");
  dim_ = rows.front().size();
  if (dim_ == 0) throw InputError("points must have dimension >= 1");
  coords_.reserve(rows.size() * dim_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim_) {
      throw InputError("point " + std::to_string(i) + " has dimension " +
                       std::to_string(rows[i].size()) + ", expected " + std::to_string(dim_));
    }
    coords_.insert(coords_.end(), rows[i].begin(), rows[i].end());
  }
}

PointCloud::PointCloud(std::size_t dim, std::vector<double> flat) : dim_(dim), coords_(std::move(flat)) {
  if (dim_ == 0) throw InputError("points must have dimension >= 1");
  if (coords_.empty()) throw InputError("point cloud must contain at least one point");
  if (coords_.size() % dim_ != 0) throw InputError("coordinate count is not a multiple of the dimension");
}

double euclidean_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw InputError("dimension mismatch: " + std::to_string(p.size()) + " vs " +
                     std::to_string(q.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = p[i] - q[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

DistanceMatrix distance_matrix(const PointCloud& cloud, unsigned threads) {
  if (cloud.empty()) throw InputError("point cloud is empty");
  const std::size_t n = cloud.size();
  DistanceMatrix dm(n);
  auto fill_rows = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < n; i += stride)
      for (std::size_t j = i + 1; j < n; ++j) dm.set(i, j, euclidean_distance(cloud.point(i), cloud.point(j)));
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    fill_rows(0, 1);
  } else {
    // Each worker writes only pairs (i, j>i) of its own rows, which are disjoint.
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(fill_rows, t, threads);
  }
  return dm;
}

PointCloud rescale_unit_box(const PointCloud& cloud) {
  if (cloud.empty()) throw InputError("cannot rescale an empty point cloud");
  const std::size_t d = cloud.dim();
  std::vector<double> scale(d, 0.0);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    auto p = cloud.point(i);
    for (std::size_t k = 0; k < d; ++k) scale[k] = std::max(scale[k], std::abs(p[k]));
  }
  PointCloud out = cloud;
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto p = out.point(i);
    for (std::size_t k = 0; k < d; ++k)
      if (scale[k] > 0.0) p[k] /= scale[k];
  }
  return out;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& field, std::size_t line_no) {
  const std::string t = trim(field);
  try {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw InputError("line " + std::to_string(line_no) + ": cannot parse number '" + t + "'");
  }
}

}  // namespace

PointCloud read_point_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) row.push_back(parse_double(field, line_no));
    if (line.back() == ',') throw InputError("line " + std::to_string(line_no) + ": trailing comma");
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError("line " + std::to_string(line_no) + ": ragged row (" + std::to_string(row.size()) +
                       " fields, expected " + std::to_string(rows.front().size()) + ")");
    }
    rows.push_back(std::move(row));
  }
  return PointCloud(rows);
}

PointCloud read_point_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_point_csv(in);
}

void write_point_csv(std::ostream& out, const PointCloud& cloud) {
  char buf[32];
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    auto p = cloud.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", p[k]);
      if (k) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

void write_point_csv_file(const std::string& path, const PointCloud& cloud) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_point_csv(out, cloud);
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace vrph
