#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "harmonic_codes/analyzer.hpp"
#include "harmonic_codes/codes.hpp"
#include "harmonic_codes/embedding.hpp"
#include "harmonic_codes/errors.hpp"
#include "harmonic_codes/harmonics.hpp"
#include "harmonic_codes/lattice.hpp"

namespace py = pybind11;
namespace hc = harmonic_codes;

// Rational <-> fractions.Fraction (ints accepted on input).
namespace pybind11::detail {
template <>
struct type_caster<hc::Rational> {
  PYBIND11_TYPE_CASTER(hc::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    const py::module_ fractions = py::module_::import("fractions");
    const py::object numbers_rational = py::module_::import("numbers").attr("Rational");
    if (!py::isinstance(src, numbers_rational)) return false;
    const std::string num = py::str(src.attr("numerator"));
    const std::string den = py::str(src.attr("denominator"));
    value = hc::Rational(hc::BigInt(num), hc::BigInt(den));
    return true;
  }

  static handle cast(const hc::Rational& r, return_value_policy, handle) {
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    const py::object builtins_int = py::module_::import("builtins").attr("int");
    return fraction(builtins_int(r.numerator().get_str()), builtins_int(r.denominator().get_str())).release();
  }
};
}  // namespace pybind11::detail

namespace {

hc::LatticeCode make_code(std::vector<hc::IntVector> points, std::int64_t scale) {
  if (points.empty()) throw hc::StructureError("code has no points");
  const std::size_t dim = points.front().size();
  return hc::LatticeCode(dim, scale, std::move(points));
}

std::vector<std::vector<hc::Rational>> to_rows(const hc::Matrix& m) {
  std::vector<std::vector<hc::Rational>> rows(m.rows(), std::vector<hc::Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

hc::Matrix from_rows(const std::vector<std::vector<hc::Rational>>& rows) {
  hc::Matrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw hc::DimensionError("Gram must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

py::object bound_value(const hc::QuadraticBound& b) {
  return b.value ? py::cast(*b.value) : py::none();
}

py::dict report_dict(const hc::CodeReport& r) {
  py::dict d;
  d["ambient_dim"] = r.ambient_dim;
  d["n_points"] = r.n_points;
  d["coherence"] = r.coherence_a;
  d["spectrum"] = r.spectrum;
  d["bound"] = bound_value(r.lower_bound_a);
  d["bound_radicand"] = r.lower_bound_a.radicand;
  d["frame_sum"] = r.frame_sum;
  d["frame_bound"] = r.frame_bound;
  d["design_strength"] = r.design_strength;
  d["design_residuals"] = r.design_residuals;
  d["optimal_antipodal"] = r.optimal_antipodal;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact construction and certification of antipodal spherical codes";

  auto base = py::register_exception<hc::Error>(m, "HarmonicCodesError", PyExc_RuntimeError);
  auto domain = py::register_exception<hc::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<hc::AntipodalityError>(m, "AntipodalityError", domain.ptr());
  py::register_exception<hc::IoError>(m, "IoError", base.ptr());

  m.def("harmonic_dimension", &hc::harmonic_dimension, py::arg("d"), py::arg("k"));
  m.def(
      "gegenbauer", [](int d, int k) { return hc::gegenbauer(d, k).coeffs(); }, py::arg("d"), py::arg("k"),
      "Normalized Gegenbauer coefficients, constant term first.");
  m.def(
      "evaluate_gegenbauer", [](int d, int k, const hc::Rational& t) { return hc::gegenbauer(d, k)(t); },
      py::arg("d"), py::arg("k"), py::arg("t"));

  m.def("e8_roots", [] { return hc::generate_e8_roots().points(); }, "The 240 E8 roots, scaled by 2.");
  m.def(
      "spectrum", [](std::vector<hc::IntVector> points) { return hc::spectrum(make_code(std::move(points), 1)); },
      py::arg("points"));
  m.def(
      "antipodal_representatives",
      [](std::vector<hc::IntVector> points) {
        return hc::select_antipodal_representatives(make_code(std::move(points), 1)).points();
      },
      py::arg("points"));

  m.def(
      "build_gram",
      [](std::vector<hc::IntVector> points, unsigned threads) {
        hc::EmbeddedCode code = [&] {
          py::gil_scoped_release release;
          return hc::build_code(make_code(std::move(points), 1), threads);
        }();
        return to_rows(code.gram());
      },
      py::arg("points"), py::arg("threads") = 1, "Exact Gram of the degree-2 embedded antipodal code.");
  m.def(
      "float_coordinates",
      [](std::vector<hc::IntVector> points) {
        const hc::EmbeddedCode code = hc::build_code(make_code(std::move(points), 1));
        std::vector<std::vector<double>> out;
        for (const auto& p : code.points()) out.push_back(hc::flatten_coordinates(p));
        return out;
      },
      py::arg("points"));
  m.def(
      "certify",
      [](std::vector<hc::IntVector> points, int t_max, unsigned threads) {
        hc::CodeReport r = [&] {
          py::gil_scoped_release release;
          return hc::certify(hc::build_code(make_code(std::move(points), 1), threads), t_max);
        }();
        return report_dict(r);
      },
      py::arg("points"), py::arg("t_max") = 5, py::arg("threads") = 1);
  m.def(
      "certify_gram",
      [](const std::vector<std::vector<hc::Rational>>& gram, std::uint64_t dim, int t_max) {
        return report_dict(hc::certify(hc::GramView::detect_antipodes(from_rows(gram)), dim, t_max));
      },
      py::arg("gram"), py::arg("dim"), py::arg("t_max") = 5);

  m.def(
      "quadratic_bound",
      [](std::uint64_t n, std::uint64_t dim) {
        const hc::QuadraticBound b = hc::quadratic_bound(n, dim);
        return py::make_tuple(b.radicand, bound_value(b));
      },
      py::arg("n"), py::arg("dim"), "(radicand, exact root or None)");
  m.def(
      "design_strength",
      [](const std::vector<std::vector<hc::Rational>>& gram, int d_sphere, int t_max) {
        const hc::DesignResult r = hc::design_strength(hc::GramView(from_rows(gram)), d_sphere, t_max);
        return py::make_tuple(r.strength, r.residuals);
      },
      py::arg("gram"), py::arg("d_sphere"), py::arg("t_max"));

  m.def(
      "constant_modulus_scan",
      [](const std::vector<hc::Rational>& values, int d, int k_min, int k_max) {
        py::list out;
        const std::set<hc::Rational> value_set(values.begin(), values.end());
        for (const auto& r : hc::constant_modulus_scan(value_set, d, k_min, k_max)) {
          py::dict item;
          item["d"] = r.d;
          item["k"] = r.k;
          item["harmonic_dim"] = r.harmonic_dim;
          item["image_values"] = r.image_values;
          item["constant_modulus"] = r.constant_modulus;
          item["modulus"] = r.modulus ? py::cast(*r.modulus) : py::none();
          out.append(item);
        }
        return out;
      },
      py::arg("values"), py::arg("d"), py::arg("k_min"), py::arg("k_max"));
  m.def(
      "candidate_parameters",
      [](const std::vector<hc::Rational>& values, int d, int k, std::uint64_t n_points) {
        const std::set<hc::Rational> value_set(values.begin(), values.end());
        const hc::CandidateParameters c = hc::candidate_parameters(value_set, d, k, n_points);
        py::dict out;
        out["harmonic_dim"] = c.harmonic_dim;
        out["n_points"] = c.n_points;
        out["coherence"] = c.coherence;
        out["bound"] = bound_value(c.bound);
        out["bound_radicand"] = c.bound.radicand;
        out["constant_modulus"] = c.constant_modulus;
        out["meets_bound"] = c.meets_bound;
        return out;
      },
      py::arg("values"), py::arg("d"), py::arg("k"), py::arg("n_points"));
}
