#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crouzeix/bounds.hpp"
#include "crouzeix/conformal.hpp"
#include "crouzeix/errors.hpp"
#include "crouzeix/kms.hpp"
#include "crouzeix/omega.hpp"
#include "crouzeix/report.hpp"

namespace py = pybind11;
using namespace crouzeix;

namespace {

py::object to_python(const report::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::array_t<std::complex<double>> to_array(const CMatrix& m) {
  py::array_t<std::complex<double>> out({m.rows(), m.cols()});
  auto v = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v(i, j) = m(i, j);
  return out;
}

conformal::ConformalData solve(int k, int n_disc) {
  py::gil_scoped_release release;
  return conformal::map_kms(k, n_disc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Crouzeix ratio bounds for KMS matrices";

  py::register_exception<crouzeix::Error>(m, "CrouzeixError", PyExc_RuntimeError);

  m.def("kms_matrix", [](int n) { return to_array(kms::build_kms(n).matrix); }, py::arg("n"));
  m.def("boundary_point", &kms::boundary_point, py::arg("k"), py::arg("theta"));
  m.def("tangential_poly", &kms::tangential_poly, py::arg("k"), py::arg("u"), py::arg("v"), py::arg("w"));
  m.def("cardioid_p", &kms::cardioid_p, py::arg("z"));
  m.def(
      "support_function",
      [](int k, double omega) { return kms::support_function(kms::build_kms(k).matrix, omega); },
      py::arg("k"), py::arg("omega"), "Support function of W(A_k) in direction omega.");

  m.def(
      "boundary",
      [](int k, int n) {
        const kms::BoundaryDiscretization d = kms::discretize_boundary(k, n);
        py::list parts;
        for (kms::BoundaryPart p : d.parts) parts.append(p == kms::BoundaryPart::Algebraic ? "algebraic" : "segment");
        py::dict out;
        out["k"] = d.k;
        out["n"] = d.n_algebraic;
        out["n_segment"] = d.n_segment;
        out["nodes"] = py::array_t<std::complex<double>>(d.nodes.size(), d.nodes.data());
        out["parts"] = parts;
        return out;
      },
      py::arg("k"), py::arg("n") = 1205);
  m.def(
      "boundary_svg", [](int k, int n) { return report::boundary_svg(kms::discretize_boundary(k, n)); },
      py::arg("k"), py::arg("n") = 1205);

  m.def(
      "map_kms",
      [](int k, int n_disc) {
        const conformal::ConformalData d = solve(k, n_disc);
        py::dict out = to_python(report::to_json(d));
        out["M"] = to_array(d.M);
        return out;
      },
      py::arg("k"), py::arg("n_disc") = 1205, "Riemann map data of W(A_k); M = g(A_k).");

  m.def(
      "bracket",
      [](int k, int n_disc) {
        const conformal::ConformalData d = solve(k, n_disc);
        bounds::BoundReport r;
        {
          py::gil_scoped_release release;
          r = bounds::bracket(k, d);
        }
        report::Json j;
        j["conformal"] = report::to_json(d);
        j["bounds"] = report::to_json(r);
        return to_python(j);
      },
      py::arg("k"), py::arg("n_disc") = 1205, "Lower and upper bounds on psi(A_k).");

  m.def(
      "blaschke_norm",
      [](const std::vector<std::complex<double>>& toeplitz_first_row, const std::vector<std::complex<double>>& roots) {
        std::vector<double> t;
        for (auto z : toeplitz_first_row) t.push_back(z.real());
        const CMatrix mat = bounds::toeplitz_nilpotent(t.size() + 1, t);
        return spectral_norm(bounds::blaschke_apply(mat, bounds::BlaschkeProduct{roots}));
      },
      py::arg("toeplitz"), py::arg("roots"));

  m.def(
      "verify_inclusion",
      [](int samples) {
        return to_python(report::to_json(omega::verify_inclusion(omega::RationalMap::published(), samples)));
      },
      py::arg("samples") = 1000);
  m.def("cond_h1", [] { return omega::cond_H1(omega::RationalMap::published()); });
  m.def(
      "convergence_study",
      [](int k, std::vector<int> counts) {
        conformal::ConvergenceTable t;
        {
          py::gil_scoped_release release;
          t = conformal::convergence_study(k, std::move(counts));
        }
        return to_python(report::to_json(t));
      },
      py::arg("k"), py::arg("node_counts"));
}
