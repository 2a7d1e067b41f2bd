#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vrph/error.hpp"
#include "vrph/generators.hpp"
#include "vrph/persistence.hpp"
#include "vrph/svg.hpp"
#include "vrph/wasserstein.hpp"

namespace py = pybind11;
using namespace vrph;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Array to_array(const PointCloud& c) {
  Array a({c.size(), c.dim()});
  std::copy(c.flat().begin(), c.flat().end(), a.mutable_data());
  return a;
}

PointCloud from_array(const Array& a) {
  if (a.ndim() != 2) throw InputError("points must be a 2-D array (n, dim)");
  const auto n = static_cast<std::size_t>(a.shape(0)), d = static_cast<std::size_t>(a.shape(1));
  return PointCloud(d, std::vector<double>(a.data(), a.data() + n * d));
}

// Barcodes cross the boundary as (n, 3) arrays of (dim, birth, death).
Array barcode_to_array(const Barcode& b) {
  Array a({b.intervals.size(), std::size_t{3}});
  auto m = a.mutable_unchecked<2>();
  for (std::size_t i = 0; i < b.intervals.size(); ++i) {
    m(i, 0) = b.intervals[i].dim;
    m(i, 1) = b.intervals[i].birth;
    m(i, 2) = b.intervals[i].death;
  }
  return a;
}

Barcode barcode_from_array(const Array& a) {
  Barcode b;
  if (a.size() == 0) return b;
  if (a.ndim() != 2 || a.shape(1) != 3) throw InputError("barcode must be an (n, 3) array of (dim, birth, death)");
  auto m = a.unchecked<2>();
  for (py::ssize_t i = 0; i < a.shape(0); ++i) {
    const double d = m(i, 0);
    if (d < 0 || d != static_cast<int>(d)) throw InputError("barcode dimensions must be non-negative integers");
    if (!(m(i, 1) <= m(i, 2))) throw InputError("barcode intervals need birth <= death");
    b.intervals.push_back({static_cast<int>(d), m(i, 1), m(i, 2)});
    if (m(i, 2) != kInfinity) b.eps_max = std::max(b.eps_max, m(i, 2));
    b.eps_max = std::max(b.eps_max, m(i, 1));
  }
  return b;
}

Filtration filtration(const Array& points, double eps, int max_dim, const std::string& rule,
                      std::uint64_t max_simplices, unsigned threads) {
  return build_vr(distance_matrix(from_array(points), threads), eps, max_dim, parse_edge_rule(rule), max_simplices);
}

}  // namespace

PYBIND11_MODULE(_vrph, m) {
  m.doc() = "Vietoris-Rips persistent homology";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<ComputationError>(m, "ComputationError", PyExc_ArithmeticError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  // InputError derives from std::invalid_argument and surfaces as ValueError.

  m.def(
      "sphere_latlon",
      [](std::size_t n_u, std::size_t n_v, const std::string& form, const std::string& grid) {
        if (form != "standard" && form != "literal") throw InputError("form must be standard or literal");
        if (grid != "periodic" && grid != "inclusive") throw InputError("grid must be periodic or inclusive");
        return to_array(gen_sphere_latlon(n_u, n_v, form == "standard" ? SphereForm::standard : SphereForm::literal,
                                          grid == "periodic" ? LatLonGrid::periodic : LatLonGrid::inclusive));
      },
      py::arg("n_u") = 20, py::arg("n_v") = 11, py::arg("form") = "standard", py::arg("grid") = "periodic");
  m.def("fibonacci_sphere", [](std::size_t n) { return to_array(gen_fibonacci_sphere(n)); }, py::arg("n") = 500);

  py::class_<MsdConfig>(m, "MsdConfig")
      .def(py::init<>())
      .def_readwrite("masses", &MsdConfig::masses)
      .def_readwrite("stiffness", &MsdConfig::stiffness)
      .def_readwrite("mode", &MsdConfig::mode_index)
      .def_property(
          "negative_stiffness", [](const MsdConfig& c) { return to_string(c.negative_stiffness); },
          [](MsdConfig& c, const std::string& s) { c.negative_stiffness = parse_negative_stiffness(s); })
      .def_property(
          "temperature", [](const MsdConfig& c) { return py::make_tuple(c.temperature.lo, c.temperature.hi, c.temperature.divisions); },
          [](MsdConfig& c, std::tuple<double, double, std::size_t> t) { c.temperature = {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; })
      .def_property(
          "expansion", [](const MsdConfig& c) { return py::make_tuple(c.expansion.lo, c.expansion.hi, c.expansion.divisions); },
          [](MsdConfig& c, std::tuple<double, double, std::size_t> t) { c.expansion = {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; })
      .def_property(
          "damage", [](const MsdConfig& c) { return py::make_tuple(c.damage.lo, c.damage.hi, c.damage.divisions); },
          [](MsdConfig& c, std::tuple<double, double, std::size_t> t) { c.damage = {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; })
      .def("validate", &MsdConfig::validate)
      .def_property_readonly("grid_size", &MsdConfig::grid_size)
      .def_static("from_file", &read_msd_config_file, py::arg("path"));

  m.def(
      "natural_frequencies",
      [](const MsdConfig& cfg, double temperature, double alpha, double damage) {
        const auto r = natural_frequencies(cfg, temperature, alpha, damage);
        return py::make_tuple(r.omega, r.omega_squared);
      },
      py::arg("config"), py::arg("temperature"), py::arg("alpha"), py::arg("damage"),
      "Returns (omega, omega_squared), each ascending.");
  m.def(
      "msd_manifold",
      [](const MsdConfig& cfg, bool raw) { return to_array(raw ? gen_msd_manifold_raw(cfg) : gen_msd_manifold(cfg)); },
      py::arg("config") = MsdConfig{}, py::arg("raw") = false);

  m.def(
      "distance_matrix",
      [](const Array& points, unsigned threads) {
        const auto dm = distance_matrix(from_array(points), threads);
        Array a({dm.size(), dm.size()});
        auto out = a.mutable_unchecked<2>();
        for (std::size_t i = 0; i < dm.size(); ++i)
          for (std::size_t j = 0; j < dm.size(); ++j) out(i, j) = dm(i, j);
        return a;
      },
      py::arg("points"), py::arg("threads") = 1);
  m.def("rescale_unit_box", [](const Array& points) { return to_array(rescale_unit_box(from_array(points))); },
        py::arg("points"));

  m.def(
      "count_simplices",
      [](const Array& points, double eps, int max_dim, const std::string& rule) {
        return count_vr_simplices(distance_matrix(from_array(points)), eps, max_dim, parse_edge_rule(rule));
      },
      py::arg("points"), py::arg("eps"), py::arg("max_dim") = 2, py::arg("edge_rule") = "paper-2eps",
      "Simplices per dimension 0..max_dim of the Vietoris-Rips complex at eps.");
  m.def(
      "betti_numbers",
      [](const Array& points, double eps, int max_k, const std::string& rule, std::uint64_t max_simplices,
         unsigned threads) {
        const auto f = filtration(points, eps, max_k + 1, rule, max_simplices, threads);
        py::gil_scoped_release release;
        return betti_numbers(f, eps, max_k);
      },
      py::arg("points"), py::arg("eps"), py::arg("max_k") = 2, py::arg("edge_rule") = "paper-2eps",
      py::arg("max_simplices") = kDefaultMaxSimplices, py::arg("threads") = 1);
  m.def(
      "persistence",
      [](const Array& points, double eps_max, int max_dim, const std::string& rule, double min_length, bool keep_zero,
         std::uint64_t max_simplices, unsigned threads) {
        const auto f = filtration(points, eps_max, max_dim, rule, max_simplices, threads);
        Barcode b;
        {
          py::gil_scoped_release release;
          b = intervals(f, {min_length, keep_zero});
        }
        return barcode_to_array(b);
      },
      py::arg("points"), py::arg("eps_max"), py::arg("max_dim") = 3, py::arg("edge_rule") = "paper-2eps",
      py::arg("min_length") = 0.0, py::arg("keep_zero") = false, py::arg("max_simplices") = kDefaultMaxSimplices,
      py::arg("threads") = 1,
      "Persistence intervals of dimensions < max_dim as an (n, 3) array of (dim, birth, death).");
  m.def(
      "betti_curve",
      [](const Array& barcode, double eps, int max_k) { return betti_curve(barcode_from_array(barcode), eps, max_k); },
      py::arg("barcode"), py::arg("eps"), py::arg("max_k") = -1);
  m.def(
      "wasserstein",
      [](const Array& left, const Array& right, double p, const std::vector<int>& dims) {
        return wasserstein_p(barcode_from_array(left), barcode_from_array(right), p, dims);
      },
      py::arg("left"), py::arg("right"), py::arg("p") = 2.0, py::arg("dims") = std::vector<int>{},
      "p-Wasserstein distance between two barcodes; inf if infinite bars cannot be matched.");

  m.def(
      "barcode_svg",
      [](const Array& barcode, double eps_max) {
        auto b = barcode_from_array(barcode);
        if (eps_max > 0) b.eps_max = eps_max;
        std::ostringstream out;
        render_barcode_svg(out, b);
        return out.str();
      },
      py::arg("barcode"), py::arg("eps_max") = 0.0);
  m.def(
      "diagram_svg",
      [](const Array& barcode, double eps_max) {
        auto b = barcode_from_array(barcode);
        if (eps_max > 0) b.eps_max = eps_max;
        std::ostringstream out;
        render_diagram_svg(out, b);
        return out.str();
      },
      py::arg("barcode"), py::arg("eps_max") = 0.0);
}
