#include "vrph/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <tuple>

#include "vrph/error.hpp"

namespace vrph {

namespace {

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"};

const char* colour(int dim) { return kPalette[static_cast<std::size_t>(dim) % std::size(kPalette)]; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double axis_extent(const Barcode& b) {
  double top = b.eps_max;
  for (const auto& iv : b.intervals) {
    top = std::max(top, iv.birth);
    if (!iv.infinite()) top = std::max(top, iv.death);
  }
  return top > 0.0 ? top : 1.0;
}

void require_nonempty(const Barcode& b) {
  if (b.intervals.empty()) throw InputError("cannot plot an empty barcode");
}

void header(std::ostream& out, double width, double height) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height) << "\" fill=\"white\"/>\n";
}

void legend(std::ostream& out, const std::set<int>& dims, double x, double y) {
  for (int d : dims) {
    out << "<g class=\"legend\"><rect x=\"" << num(x) << "\" y=\"" << num(y - 9) << "\" width=\"12\" height=\"10\" fill=\""
        << colour(d) << "\"/><text x=\"" << num(x + 16) << "\" y=\"" << num(y) << "\">H" << d << "</text></g>\n";
    y += 16;
  }
}

void ticks(std::ostream& out, double x0, double x1, double y, double extent) {
  for (int t = 0; t <= 5; ++t) {
    const double value = extent * t / 5.0;
    const double x = x0 + (x1 - x0) * t / 5.0;
    out << "<line x1=\"" << num(x) << "\" y1=\"" << num(y) << "\" x2=\"" << num(x) << "\" y2=\"" << num(y + 4)
        << "\" stroke=\"black\"/><text x=\"" << num(x) << "\" y=\"" << num(y + 16) << "\" text-anchor=\"middle\">"
        << format_significant(value, 3) << "</text>\n";
  }
}

template <class Render>
void to_file(const std::string& path, const Barcode& b, Render render) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  render(out, b);
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

void render_barcode_svg(std::ostream& out, const Barcode& b) {
  require_nonempty(b);
  auto bars = b.intervals;
  std::stable_sort(bars.begin(), bars.end(), [](const auto& x, const auto& y) {
    return std::tie(x.dim, x.birth) < std::tie(y.dim, y.birth);
  });
  const double left = 50, right = 110, top = 20, row = 8, bottom = 40, plot_w = 600;
  const double height = top + row * static_cast<double>(bars.size()) + bottom;
  const double width = left + plot_w + right;
  const double extent = axis_extent(b);
  auto x_of = [&](double eps) { return left + plot_w * std::min(eps, extent) / extent; };

  header(out, width, height);
  std::set<int> dims;
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const auto& iv = bars[i];
    dims.insert(iv.dim);
    const double y = top + row * static_cast<double>(i) + 1;
    const double x0 = x_of(iv.birth);
    const double x1 = iv.infinite() ? x_of(extent) : x_of(iv.death);
    out << "<rect class=\"bar\" x=\"" << num(x0) << "\" y=\"" << num(y) << "\" width=\"" << num(std::max(x1 - x0, 0.5))
        << "\" height=\"" << num(row - 2) << "\" fill=\"" << colour(iv.dim) << "\"/>\n";
    if (iv.infinite()) {
      out << "<polygon class=\"arrow\" points=\"" << num(x1) << ',' << num(y - 1) << ' ' << num(x1 + 7) << ','
          << num(y + (row - 2) / 2) << ' ' << num(x1) << ',' << num(y + row - 1) << "\" fill=\"" << colour(iv.dim)
          << "\"/>\n";
    }
  }
  const double axis_y = top + row * static_cast<double>(bars.size()) + 4;
  out << "<line class=\"axis\" x1=\"" << num(left) << "\" y1=\"" << num(axis_y) << "\" x2=\"" << num(left + plot_w)
      << "\" y2=\"" << num(axis_y) << "\" stroke=\"black\"/>\n";
  ticks(out, left, left + plot_w, axis_y, extent);
  out << "<text x=\"" << num(left + plot_w / 2) << "\" y=\"" << num(axis_y + 32)
      << "\" text-anchor=\"middle\">epsilon</text>\n";
  legend(out, dims, left + plot_w + 20, top + 10);
  out << "</svg>\n";
}

void render_barcode_svg(const std::string& path, const Barcode& b) {
  to_file(path, b, [](std::ostream& o, const Barcode& x) { render_barcode_svg(o, x); });
}

void render_diagram_svg(std::ostream& out, const Barcode& b) {
  require_nonempty(b);
  const double margin = 50, size = 500, legend_w = 90;
  const double extent = axis_extent(b);
  const double rail = extent * 1.08;  // y value drawn for infinite deaths
  auto x_of = [&](double v) { return margin + size * v / rail; };
  auto y_of = [&](double v) { return margin + size - size * v / rail; };

  header(out, margin * 2 + size + legend_w, margin * 2 + size);
  out << "<line class=\"diagonal\" x1=\"" << num(x_of(0)) << "\" y1=\"" << num(y_of(0)) << "\" x2=\""
      << num(x_of(rail)) << "\" y2=\"" << num(y_of(rail)) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  out << "<line class=\"inf-rail\" x1=\"" << num(x_of(0)) << "\" y1=\"" << num(y_of(rail)) << "\" x2=\""
      << num(x_of(rail)) << "\" y2=\"" << num(y_of(rail)) << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << num(x_of(0) - 6) << "\" y=\"" << num(y_of(rail) + 4) << "\" text-anchor=\"end\">inf</text>\n";
  out << "<line class=\"axis\" x1=\"" << num(x_of(0)) << "\" y1=\"" << num(y_of(0)) << "\" x2=\"" << num(x_of(rail))
      << "\" y2=\"" << num(y_of(0)) << "\" stroke=\"black\"/>\n";
  out << "<line class=\"axis\" x1=\"" << num(x_of(0)) << "\" y1=\"" << num(y_of(0)) << "\" x2=\"" << num(x_of(0))
      << "\" y2=\"" << num(y_of(rail)) << "\" stroke=\"black\"/>\n";
  ticks(out, x_of(0), x_of(extent), y_of(0), extent);
  out << "<text x=\"" << num(margin + size / 2) << "\" y=\"" << num(margin + size + 36)
      << "\" text-anchor=\"middle\">birth</text>\n"
      << "<text x=\"" << num(margin - 34) << "\" y=\"" << num(margin + size / 2) << "\" transform=\"rotate(-90 "
      << num(margin - 34) << ' ' << num(margin + size / 2) << ")\" text-anchor=\"middle\">death</text>\n";

  std::map<std::tuple<int, double, double>, int> multiplicity;
  for (const auto& iv : b.intervals) ++multiplicity[{iv.dim, iv.birth, iv.death}];
  std::set<int> dims;
  for (const auto& [key, count] : multiplicity) {
    const auto& [dim, birth, death] = key;
    dims.insert(dim);
    const double cx = x_of(birth);
    const double cy = std::isinf(death) ? y_of(rail) : y_of(death);
    out << "<circle class=\"point\" cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"3.5\" fill=\""
        << colour(dim) << "\" data-birth=\"" << format_significant(birth, 9) << "\" data-death=\""
        << format_significant(death, 9) << "\"/>\n";
    if (count > 1) {
      out << "<text class=\"multiplicity\" x=\"" << num(cx + 5) << "\" y=\"" << num(cy - 5) << "\">×" << count
          << "</text>\n";
    }
  }
  legend(out, dims, margin * 2 + size, margin + 10);
  out << "</svg>\n";
}

void render_diagram_svg(const std::string& path, const Barcode& b) {
  to_file(path, b, [](std::ostream& o, const Barcode& x) { render_diagram_svg(o, x); });
}

}  // namespace vrph
