#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stadion/diophantine.hpp"
#include "stadion/pipeline.hpp"
#include "stadion/report.hpp"
#include "stadion/semiclassics.hpp"
#include "stadion/trigfield.hpp"

#include <memory>

namespace py = pybind11;
using namespace stadion;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

py::list to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

CaseConfig config_for(const std::string& name) {
  const CaseLabel label = parse_case_label(name);
  if (label == CaseLabel::Custom) throw std::invalid_argument("unknown case " + name);
  return preset(label);
}

py::dict approximation_dict(const Approximation& a) {
  py::dict d;
  d["found"] = a.found;
  d["Z"] = a.Z;
  d["q"] = to_py(a.q);
  d["max_error"] = a.max_error;
  d["eps"] = a.eps;
  d["N"] = a.N;
  return d;
}

// Geometry and wave function kept together so the model never outlives its case.
struct Wave {
  std::shared_ptr<const CaseGeometry> geometry;
  SwfModel model;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Semiclassical stadium quantization through rational polygon envelopes.";

  py::class_<FieldElement>(m, "FieldElement")
      .def(py::init([](const std::vector<long long>& c) {
             FieldElement e;
             for (std::size_t i = 0; i < c.size(); ++i) {
               if (i >= kFieldDim) throw std::invalid_argument("at most eight coefficients");
               e += FieldElement::generator(i) * Rational(c[i]);
             }
             return e;
           }),
           py::arg("coeffs"))
      .def_static("generator", py::overload_cast<std::size_t>(&FieldElement::generator), py::arg("index"))
      .def("__float__", &FieldElement::eval)
      .def("__str__", &FieldElement::to_string)
      .def("__repr__", [](const FieldElement& e) { return "FieldElement(" + e.to_string() + ")"; })
      .def("coeffs", &FieldElement::to_strings, "eight num/den strings, X0 first")
      .def("inverse", &inverse)
      .def("__add__", [](const FieldElement& a, const FieldElement& b) { return a + b; })
      .def("__sub__", [](const FieldElement& a, const FieldElement& b) { return a - b; })
      .def("__mul__", [](const FieldElement& a, const FieldElement& b) { return mul(a, b); })
      .def("__neg__", [](const FieldElement& a) { return -a; })
      .def("__eq__", [](const FieldElement& a, const FieldElement& b) { return a == b; });
  m.def("cos_pi16", &cos_pi16, py::arg("k"), "cos(k pi / 16) as a field element");
  m.def("sin_pi16", &sin_pi16, py::arg("k"));

  py::class_<CaseGeometry, std::shared_ptr<CaseGeometry>>(m, "Case")
      .def_property_readonly("name", [](const CaseGeometry& g) { return g.config.name; })
      .def_property_readonly("accuracy", [](const CaseGeometry& g) { return g.config.accuracy; })
      .def_property_readonly("genus", [](const CaseGeometry& g) { return g.summary.genus; })
      .def_property_readonly("independent_periods", [](const CaseGeometry& g) { return g.summary.independent_period_count; })
      .def_property_readonly("linking_periods", [](const CaseGeometry& g) { return g.summary.linking_period_count; })
      .def_property_readonly("envelope_vertices",
                             [](const CaseGeometry& g) {
                               std::vector<std::pair<double, double>> v;
                               for (const auto& p : g.envelope.vertices) v.emplace_back(p.x, p.y);
                               return v;
                             })
      .def_property_readonly("interior_angles", [](const CaseGeometry& g) { return g.envelope.interior_angles; })
      .def_property_readonly("epsilon_pol",
                             [](const CaseGeometry& g) { return envelope_accuracy_bound(g.tangents).epsilon_pol; })
      .def("envelope_json", [](const CaseGeometry& g, std::size_t samples) { return dump_json(envelope_json(g, samples)); },
           py::arg("samples") = 10000)
      .def("unfold_json", [](const CaseGeometry& g) { return dump_json(unfold_json(g)); });

  m.def("build_case", [](const std::string& name) { return std::make_shared<CaseGeometry>(build_case(config_for(name))); },
        py::arg("name"), "Geometry, envelope and unfolding of a preset case (A, B or C).");
  m.def("build_case_from_json",
        [](const std::string& text) { return std::make_shared<CaseGeometry>(build_case(parse_config(text))); },
        py::arg("config"));

  m.def(
      "min_z",
      [](const std::string& name, double eps, std::uint64_t z_cap, int threads) {
        ScanOptions o;
        o.threads = threads;
        Approximation a;
        {
          py::gil_scoped_release release;
          a = min_z_for_accuracy(IrrationalSet::for_case(parse_case_label(name)), eps, z_cap, o);
        }
        return approximation_dict(a);
      },
      py::arg("case"), py::arg("eps"), py::arg("z_cap") = 1000000000ULL, py::arg("threads") = 0,
      "Smallest multiplier bringing every irrational of the case within eps of an integer.");
  m.def(
      "approximation_at",
      [](const std::string& name, std::uint64_t Z) {
        return approximation_dict(approximation_at(IrrationalSet::for_case(parse_case_label(name)), Z));
      },
      py::arg("case"), py::arg("Z"));

  m.def("energy", [](std::uint64_t Z, long mm, long n) { return static_cast<double>(energy(Z, {mm, n})); },
        py::arg("Z"), py::arg("m"), py::arg("n"));
  m.def("energy_over_pi2", [](std::uint64_t Z, long mm, long n) { return to_py(energy_over_pi2(Z, {mm, n})); },
        py::arg("Z"), py::arg("m"), py::arg("n"), "E / pi^2 as an exact integer");

  py::class_<Wave>(m, "WaveFunction")
      .def(py::init([](std::shared_ptr<const CaseGeometry> g, std::uint64_t Z, long mm, long n) {
             return Wave{g, SwfModel::build(*g, Z, {mm, n})};
           }),
           py::arg("case"), py::arg("Z"), py::arg("m"), py::arg("n"))
      .def_property_readonly("energy", [](const Wave& w) { return static_cast<double>(w.model.energy()); })
      .def_property_readonly("degenerate", [](const Wave& w) { return w.model.degenerate(); })
      .def_property_readonly("corner_x", [](const Wave& w) { return static_cast<double>(w.model.corner_x()); })
      .def("__call__",
           [](const Wave& w, double x, double y) {
             const Complex v = w.model.value({x, y});
             return std::complex<double>(double(v.real()), double(v.imag()));
           },
           py::arg("x"), py::arg("y"))
      .def("gradient",
           [](const Wave& w, double x, double y) {
             const auto g = w.model.gradient({x, y});
             return std::pair(std::complex<double>(double(g[0].real()), double(g[0].imag())),
                              std::complex<double>(double(g[1].real()), double(g[1].imag())));
           },
           py::arg("x"), py::arg("y"))
      .def("grid",
           [](const Wave& w, std::size_t n, int threads) {
             std::vector<GridSample> s;
             {
               py::gil_scoped_release release;
               s = grid_eval(w.model, *w.geometry, n, threads);
             }
             py::array_t<double> x({n, n}), y({n, n}), re({n, n}), im({n, n});
             auto px = x.mutable_unchecked<2>(), py_ = y.mutable_unchecked<2>(), pr = re.mutable_unchecked<2>(),
                  pi = im.mutable_unchecked<2>();
             for (std::size_t j = 0; j < n; ++j)
               for (std::size_t i = 0; i < n; ++i) {
                 const auto& g = s[j * n + i];
                 px(j, i) = g.x;
                 py_(j, i) = g.y;
                 pr(j, i) = g.inside ? double(g.re) : NAN;
                 pi(j, i) = g.inside ? double(g.im) : NAN;
               }
             return py::make_tuple(x, y, re, im);
           },
           py::arg("n") = 128, py::arg("threads") = 1, "x, y, Re psi, Im psi on an n x n grid; NaN outside")
      .def("residual_json",
           [](const Wave& w, double eps, std::size_t samples, int threads) {
             const auto a = approximation_at(irrationals_for(*w.geometry), w.model.Z());
             ResidualOptions o;
             o.boundary_samples = samples;
             o.threads = threads;
             return dump_json(residual_json(*w.geometry, w.model, a, eps, o));
           },
           py::arg("eps"), py::arg("samples") = 1024, py::arg("threads") = 1);
}
