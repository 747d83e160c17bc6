#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semicrossed/config.hpp"
#include "semicrossed/error.hpp"
#include "semicrossed/expr.hpp"
#include "semicrossed/norms.hpp"
#include "semicrossed/verify.hpp"

namespace py = pybind11;
using namespace semicrossed;

namespace {

Element element(const DynamicalSystem& sys, const std::string& text, const std::string& form) {
  if (form == "semicrossed") {
    Element e = parseElement(sys, text);
    requireSemicrossed(e);
    return e;
  }
  if (form == "crossed") return parseElement(sys, text);
  if (form == "relation2") return parseElement(sys, text, Form::Right);
  throw Error(Errc::BadInput, "form must be semicrossed, crossed or relation2");
}

py::dict estimateDict(const NormEstimate& e) {
  py::list traces;
  for (const auto& t : e.traces) traces.append(py::make_tuple(t.family, t.point, t.parameter, t.value));
  py::dict d;
  d["lower"] = e.bracket.lower;
  d["upper"] = e.bracket.upper;
  d["witness"] = e.witness;
  d["traces"] = traces;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orbit and periodic representations of semicrossed products";

  py::register_exception<Error>(m, "SemicrossedError", PyExc_ValueError);

  py::class_<DynamicalSystem>(m, "System")
      .def_static("circle", &DynamicalSystem::circle, py::arg("k"))
      .def_static("sft", &DynamicalSystem::sft, py::arg("matrix"))
      .def_static("permutation", &DynamicalSystem::permutation, py::arg("perm"))
      .def_property_readonly("is_homeomorphism", &DynamicalSystem::isHomeomorphism)
      .def("__repr__", &DynamicalSystem::describe);

  py::class_<Element>(m, "Element")
      .def_property_readonly("band", &Element::band)
      .def_property_readonly("is_semicrossed", &Element::isSemicrossed)
      .def("__repr__", [](const Element& e) { return toString(e); });

  m.def(
      "classify",
      [](const DynamicalSystem& sys, const std::string& point, std::int64_t maxSteps) {
        const auto c = classify(sys, parsePoint(sys, point), maxSteps);
        return py::make_tuple(toString(c), c.period, c.preperiod);
      },
      py::arg("system"), py::arg("point"), py::arg("max_steps") = 1 << 20);
  m.def(
      "preimages",
      [](const DynamicalSystem& sys, const std::string& point) {
        std::vector<std::string> out;
        for (const auto& p : preimages(sys, parsePoint(sys, point))) out.push_back(toString(p));
        return out;
      },
      py::arg("system"), py::arg("point"));
  m.def(
      "lift",
      [](const DynamicalSystem& sys, const std::string& point, const std::string& chooser, int count) {
        const auto xt = liftPoint(sys, parsePoint(sys, point), parseChooser(chooser));
        std::vector<std::string> out;
        for (int i = 1; i <= count; ++i) out.push_back(toString(coordinate(xt, i)));
        return out;
      },
      py::arg("system"), py::arg("point"), py::arg("chooser") = "min", py::arg("count") = 8);
  m.def("element", &element, py::arg("system"), py::arg("text"), py::arg("form") = "semicrossed");
  m.def(
      "multiply", [](const DynamicalSystem& sys, const Element& a, const Element& b) { return multiply(sys, a, b); },
      py::arg("system"), py::arg("a"), py::arg("b"));
  m.def(
      "adjoint", [](const DynamicalSystem& sys, const Element& a) { return adjoint(sys, a); }, py::arg("system"),
      py::arg("a"));

  m.def(
      "orbit_rep",
      [](const DynamicalSystem& sys, const std::string& x, const Element& f, int n) {
        return orbitRepMatrix(sys, parsePoint(sys, x), f, n);
      },
      py::arg("system"), py::arg("point"), py::arg("element"), py::arg("n"));
  m.def(
      "periodic_rep",
      [](const DynamicalSystem& sys, const std::string& y, cplx lambda, const Element& f) {
        return periodicRepMatrix(sys, parsePoint(sys, y), lambda, f);
      },
      py::arg("system"), py::arg("point"), py::arg("lam"), py::arg("element"));
  m.def(
      "bilateral_rep",
      [](const DynamicalSystem& sys, const std::string& x, const Element& f, int window, const std::string& chooser) {
        return bilateralRepMatrix(sys, liftPoint(sys, parsePoint(sys, x), parseChooser(chooser)), f, window);
      },
      py::arg("system"), py::arg("point"), py::arg("element"), py::arg("window"), py::arg("chooser") = "min");
  m.def("spectral_norm", &spectralNorm, py::arg("matrix"));

  m.def(
      "norm",
      [](const DynamicalSystem& sys, const Element& f, int nmax, int grid, std::uint64_t seed) {
        Budget b;
        b.nMax = nmax;
        b.gridSize = grid;
        b.seed = seed;
        return estimateDict(semicrossedNorm(sys, f, defaultSamples(sys, b), b.nMax, b.gridSize));
      },
      py::arg("system"), py::arg("element"), py::arg("nmax") = 256, py::arg("grid") = 256, py::arg("seed") = 1);

  m.def("checks", &checkNames);
  m.def(
      "verify",
      [](const std::string& name, std::uint64_t seed) {
        VerifyOptions opt;
        opt.budget.seed = seed;
        py::list rows;
        for (const auto& r : runCheck(name, opt)) rows.append(py::make_tuple(r.item, r.measured, r.tolerance, r.pass));
        return rows;
      },
      py::arg("name"), py::arg("seed") = 1);

  m.def(
      "load_config",
      [](const std::string& text) {
        const Config c = parseConfig(text);
        py::dict elements;
        for (const auto& [name, e] : c.elements) elements[py::str(name)] = e;
        return py::make_tuple(c.system, elements);
      },
      py::arg("text"));
}
