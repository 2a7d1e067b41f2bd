#include "vrph/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vrph/error.hpp"

namespace vrph {

namespace {

constexpr std::int64_t kNoPivot = -1;

// col <- col + other over GF(2); both sorted ascending.
void add_column(std::vector<std::uint32_t>& col, const std::vector<std::uint32_t>& other,
                std::vector<std::uint32_t>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(scratch));
  col.swap(scratch);
}

void check_column(const BoundaryMatrix& bm, std::size_t j) {
  auto c = bm.column(j);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] >= j) throw InvariantError("boundary column refers to a later simplex");
    if (k && c[k - 1] >= c[k]) throw InvariantError("boundary column is not sorted");
  }
}

/// Reduces column j against reduced columns stored by pivot row. Returns the
/// pivot row, or kNoPivot if the column vanished.
std::int64_t reduce_column(const BoundaryMatrix& bm, std::size_t j, std::vector<std::int64_t>& pivot_column,
                           std::vector<std::vector<std::uint32_t>>& reduced, std::vector<std::uint32_t>& scratch) {
  auto src = bm.column(j);
  std::vector<std::uint32_t> col(src.begin(), src.end());
  while (!col.empty()) {
    const std::int64_t k = pivot_column[col.back()];
    if (k == kNoPivot) break;
    add_column(col, reduced[static_cast<std::size_t>(k)], scratch);
  }
  if (col.empty()) return kNoPivot;
  const std::uint32_t low = col.back();
  pivot_column[low] = static_cast<std::int64_t>(j);
  reduced[j] = std::move(col);
  return low;
}

Pairing collect(std::size_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs) {
  std::sort(pairs.begin(), pairs.end(), [](auto a, auto b) { return a.second < b.second; });
  std::vector<char> paired(n, 0);
  for (auto [i, j] : pairs) paired[i] = paired[j] = 1;
  Pairing out;
  out.pairs = std::move(pairs);
  for (std::size_t j = 0; j < n; ++j)
    if (!paired[j]) out.unpaired.push_back(static_cast<std::uint32_t>(j));
  return out;
}

}  // namespace

Pairing reduce(const BoundaryMatrix& bm) {
  const std::size_t n = bm.size();
  std::vector<std::int64_t> pivot_column(n, kNoPivot);
  std::vector<std::vector<std::uint32_t>> reduced(n);
  std::vector<std::uint32_t> scratch;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t j = 0; j < n; ++j) {
    check_column(bm, j);
    const auto low = reduce_column(bm, j, pivot_column, reduced, scratch);
    if (low != kNoPivot) pairs.emplace_back(static_cast<std::uint32_t>(low), static_cast<std::uint32_t>(j));
  }
  return collect(n, std::move(pairs));
}

Pairing reduce_with_clearing(const BoundaryMatrix& bm) {
  const std::size_t n = bm.size();
  int top = 0;
  for (std::size_t j = 0; j < n; ++j) {
    check_column(bm, j);
    top = std::max(top, bm.dim(j));
  }
  std::vector<std::vector<std::uint32_t>> by_dim(static_cast<std::size_t>(top) + 1);
  for (std::size_t j = 0; j < n; ++j) by_dim[static_cast<std::size_t>(bm.dim(j))].push_back(static_cast<std::uint32_t>(j));

  std::vector<std::int64_t> pivot_column(n, kNoPivot);
  std::vector<std::vector<std::uint32_t>> reduced(n);
  std::vector<char> cleared(n, 0);
  std::vector<std::uint32_t> scratch;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (int d = top; d >= 1; --d) {
    for (std::uint32_t j : by_dim[static_cast<std::size_t>(d)]) {
      // A column that is the pivot row of a higher-dimensional column reduces to zero.
      if (cleared[j]) continue;
      const auto low = reduce_column(bm, j, pivot_column, reduced, scratch);
      if (low == kNoPivot) continue;
      pairs.emplace_back(static_cast<std::uint32_t>(low), j);
      cleared[static_cast<std::size_t>(low)] = 1;
    }
    // Lower dimensions never reuse these columns.
    for (std::uint32_t j : by_dim[static_cast<std::size_t>(d)]) std::vector<std::uint32_t>().swap(reduced[j]);
  }
  return collect(n, std::move(pairs));
}

std::vector<PersistenceInterval> Barcode::of_dim(int k) const {
  std::vector<PersistenceInterval> out;
  for (const auto& iv : intervals)
    if (iv.dim == k) out.push_back(iv);
  return out;
}

int Barcode::top_dim() const {
  if (max_homology_dim >= 0) return max_homology_dim;
  int top = 0;
  for (const auto& iv : intervals) top = std::max(top, iv.dim);
  return top;
}

Barcode intervals(const Filtration& f, const Pairing& pairing, const IntervalOptions& options) {
  if (options.min_length < 0.0) throw InputError("minimum interval length must be >= 0");
  Barcode b;
  b.eps_max = f.eps_max();
  b.min_length = options.min_length;
  b.max_homology_dim = f.max_dim() - 1;
  auto keep = [&](const PersistenceInterval& iv) {
    if (iv.dim >= f.max_dim()) return false;
    if (iv.infinite()) return true;
    const double len = iv.length();
    if (len == 0.0) return options.keep_zero && options.min_length == 0.0;
    return len > options.min_length;
  };
  for (auto [i, j] : pairing.pairs) {
    PersistenceInterval iv{f.dim(i), f.birth(i), f.birth(j)};
    if (keep(iv)) b.intervals.push_back(iv);
  }
  for (auto i : pairing.unpaired) {
    PersistenceInterval iv{f.dim(i), f.birth(i), kInfinity};
    if (keep(iv)) b.intervals.push_back(iv);
  }
  std::sort(b.intervals.begin(), b.intervals.end(), [](const auto& x, const auto& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    if (x.birth != y.birth) return x.birth < y.birth;
    return x.death < y.death;
  });
  return b;
}

Barcode intervals(const Filtration& f, const IntervalOptions& options) {
  return intervals(f, reduce_with_clearing(build_boundary_matrix(f)), options);
}

std::vector<std::size_t> betti_curve(const Barcode& b, double eps, int max_k) {
  if (eps < 0.0) throw InputError("eps must be >= 0");
  if (max_k < 0) max_k = b.top_dim();
  std::vector<std::size_t> betti(static_cast<std::size_t>(max_k) + 1, 0);
  for (const auto& iv : b.intervals)
    if (iv.dim <= max_k && iv.birth <= eps && eps < iv.death) ++betti[static_cast<std::size_t>(iv.dim)];
  return betti;
}

std::string format_significant(double value, int digits) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

void write_barcode_csv(std::ostream& out, const Barcode& b) {
  out << "dim,birth,death\n";
  for (const auto& iv : b.intervals)
    out << iv.dim << ',' << format_significant(iv.birth, 9) << ',' << format_significant(iv.death, 9) << '\n';
}

void write_barcode_csv_file(const std::string& path, const Barcode& b) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_barcode_csv(out, b);
  if (!out) throw IoError("write to '" + path + "' failed");
}

Barcode read_barcode_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("barcode CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "dim,birth,death") throw InputError("barcode CSV must start with the header 'dim,birth,death'");
  Barcode b;
  std::size_t line_no = 1;
  auto number = [&](const std::string& s) {
    if (s == "inf") return kInfinity;
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw InputError("barcode line " + std::to_string(line_no) + ": bad number '" + s + "'");
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 3) throw InputError("barcode line " + std::to_string(line_no) + ": expected 3 fields");
    PersistenceInterval iv;
    const double d = number(fields[0]);
    if (d < 0 || d != std::floor(d) || std::isinf(d))
      throw InputError("barcode line " + std::to_string(line_no) + ": bad dimension");
    iv.dim = static_cast<int>(d);
    iv.birth = number(fields[1]);
    iv.death = number(fields[2]);
    if (std::isinf(iv.birth) || !(iv.birth <= iv.death))
      throw InputError("barcode line " + std::to_string(line_no) + ": interval must satisfy birth <= death");
    b.intervals.push_back(iv);
  }
  double top = 0.0;
  for (const auto& iv : b.intervals) {
    top = std::max(top, iv.birth);
    if (!iv.infinite()) top = std::max(top, iv.death);
  }
  b.eps_max = top;
  return b;
}

Barcode read_barcode_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_barcode_csv(in);
}

}  // namespace vrph
