#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gfi/config.hpp"
#include "gfi/expr.hpp"
#include "gfi/report.hpp"

namespace py = pybind11;
using namespace gfi;

namespace {

OrthogonalSet make_set(const std::vector<std::string>& exprs, double domain_end) {
  std::vector<L2Fn> members;
  members.reserve(exprs.size());
  for (const auto& e : exprs) members.push_back(parse_l2(e, domain_end));
  return OrthogonalSet(std::move(members));
}

PathView view_row(const py::array_t<double>& grid, const py::array_t<double>& values) {
  if (grid.ndim() != 1 || values.ndim() != 1 || grid.shape(0) != values.shape(0))
    throw Error("grid and values must be 1-d arrays of equal length");
  return {std::span<const double>(grid.data(), size_t(grid.shape(0))),
          std::span<const double>(values.data(), size_t(values.shape(0)))};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "generalized analytic Feynman integrals and Fourier-Feynman transforms on Wiener space";

  py::register_exception<Error>(m, "GfiError");

  py::class_<L2Fn>(m, "L2Fn")
      .def_static("parse", [](const std::string& e, double T) { return parse_l2(e, T); },
                  py::arg("expr"), py::arg("domain_end") = 1.0)
      .def_static("shifted_legendre", &L2Fn::shifted_legendre, py::arg("degree"),
                  py::arg("domain_end") = 1.0)
      .def("__call__", [](const L2Fn& f, double t) { return f(t); })
      .def_property_readonly("label", &L2Fn::label)
      .def_property_readonly("domain_end", &L2Fn::domain_end)
      .def("__mul__", [](const L2Fn& a, const L2Fn& b) { return a * b; });

  m.def("inner_product", &inner_product);
  m.def("norm", [](const L2Fn& f) { return norm(f); });
  m.def("is_supp_inf", [](const L2Fn& h) { return is_supp_inf(h); });
  m.def("is_orthogonal_set", [](const std::vector<L2Fn>& fs, double tau) {
    return is_orthogonal_set(fs, tau);
  });

  py::class_<WeightFn>(m, "WeightFn")
      .def_static("parse",
                  [](const std::string& e, double T) { return WeightFn::checked(parse_l2(e, T)); },
                  py::arg("expr"), py::arg("domain_end") = 1.0)
      .def_static("unit", &WeightFn::unit, py::arg("domain_end") = 1.0)
      .def_property_readonly("label", &WeightFn::label);

  py::class_<GaussPolyFn>(m, "GaussPolyFn")
      .def_static("parse",
                  [](const std::string& e, std::size_t n) { return parse_kernel(e, n); },
                  py::arg("expr"), py::arg("arity"))
      .def("__call__",
           [](const GaussPolyFn& f, const std::vector<double>& u) { return f.eval(u); })
      .def_property_readonly("arity", &GaussPolyFn::arity);

  py::class_<CylinderFunctional>(m, "CylinderFunctional")
      .def(py::init([](const std::vector<std::string>& basis, const std::string& kernel, double T) {
             OrthogonalSet A = make_set(basis, T);
             GaussPolyFn f = parse_kernel(kernel, A.size());
             return CylinderFunctional(std::move(A), std::move(f));
           }),
           py::arg("basis"), py::arg("kernel"), py::arg("domain_end") = 1.0)
      .def("eval_args",
           [](const CylinderFunctional& f, const std::vector<double>& u) { return f.eval_args(u); })
      .def("eval",
           [](const CylinderFunctional& f, const py::array_t<double>& grid,
              const py::array_t<double>& values) { return f.eval(view_row(grid, values)); })
      .def_property_readonly("arity", &CylinderFunctional::arity);

  m.def("gaussian_reduction", &gaussian_reduction, py::arg("functional"), py::arg("rho"));
  m.def("analytic_wiener_integral", &analytic_wiener_integral, py::arg("functional"),
        py::arg("weight"), py::arg("lam"));
  m.def("feynman_integral", &feynman_integral, py::arg("functional"), py::arg("weight"),
        py::arg("q"));
  m.def("feynman_linear_weighted",
        [](const CylinderFunctional& F, const WeightFn& h1, const WeightFn& h2,
           const L2Fn& z, double q) { return feynman_linear_weighted(F, h1, h2, z, q); });
  m.def(
      "gfft_kernel",
      [](const CylinderFunctional& F, const WeightFn& k, double q, double p) {
        return gfft(F, k, q, p).functional.kernel();
      },
      py::arg("functional"), py::arg("weight"), py::arg("q"), py::arg("p") = 2.0);
  m.def("first_variation",
        [](const CylinderFunctional& F, const WeightFn& h1, const WeightFn& h2, const L2Fn& z,
           const py::array_t<double>& grid, const py::array_t<double>& values) {
          return first_variation(F, h1, h2, VariationDirection::w_z(z), view_row(grid, values));
        });

  py::class_<PathEnsemble>(m, "PathEnsemble")
      .def_property_readonly("n_paths", &PathEnsemble::n_paths)
      .def_property_readonly("n_steps", &PathEnsemble::n_steps)
      .def_property_readonly("seed", &PathEnsemble::seed)
      .def_property_readonly("grid",
                             [](const PathEnsemble& e) {
                               return py::array_t<double>(py::ssize_t(e.grid().size()),
                                                          e.grid().data());
                             })
      .def("path", [](const PathEnsemble& e, std::size_t p) {
        auto v = e.path(p).values;
        return py::array_t<double>(py::ssize_t(v.size()), v.data());
      });

  m.def("sample_brownian", &sample_brownian, py::arg("n_steps"), py::arg("n_paths"), py::arg("seed"),
        py::arg("domain_end") = 1.0, py::arg("workers") = 0);
  m.def("pwz_integral", [](const L2Fn& v, const py::array_t<double>& grid,
                           const py::array_t<double>& values) {
    return pwz_integral(v, view_row(grid, values));
  });

  m.def(
      "verify",
      [](std::uint64_t seed, int configs, bool corrupt, int mc_configs) {
        SuiteConfig cfg;
        cfg.seed = seed;
        cfg.configs_per_check = configs;
        cfg.corrupt = corrupt;
        cfg.mc_configs = mc_configs;
        return reports_to_json(run_suite(cfg));
      },
      py::arg("seed") = 20250809, py::arg("configs") = 5, py::arg("corrupt") = false,
      py::arg("mc_configs") = 0,
      "run the identity suite; returns the JSON report document");
}
