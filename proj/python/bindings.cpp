// pybind11 module: the lab's main operations for interactive use.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schatten/carleman.hpp"
#include "schatten/experiment.hpp"
#include "schatten/kernel.hpp"
#include "schatten/membership.hpp"
#include "schatten/spectrum.hpp"

namespace py = pybind11;
using namespace schatten;

PYBIND11_MODULE(_core, m) {
  m.doc() = "singular spectra of discretized integral operators";

  py::class_<SingularSpectrum>(m, "SingularSpectrum")
      .def_readonly("values", &SingularSpectrum::values)
      .def_readonly("source", &SingularSpectrum::source)
      .def("__len__", &SingularSpectrum::size)
      .def("__getitem__",
           [](const SingularSpectrum& s, std::size_t k) {
             if (k >= s.size()) throw py::index_error();
             return s[k];
           })
      .def("__repr__", [](const SingularSpectrum& s) {
        return "<SingularSpectrum n=" + std::to_string(s.size()) + " from " +
               s.source + ">";
      });

  py::class_<TailFit>(m, "TailFit")
      .def_readonly("exponent", &TailFit::exponent)
      .def_readonly("log_constant", &TailFit::log_constant)
      .def_readonly("residual", &TailFit::residual)
      .def_readonly("k_min", &TailFit::k_min)
      .def_readonly("k_max", &TailFit::k_max)
      .def_readonly("super_polynomial", &TailFit::super_polynomial);

  m.def("singular_values",
        static_cast<SingularSpectrum (*)(const Matrix&)>(&singular_values),
        py::arg("matrix"), "all singular values of a matrix, nonincreasing");
  m.def("complex_eigenvalues", &complex_eigenvalues, py::arg("matrix"),
        "eigenvalues sorted by descending modulus");
  m.def("schatten_norm", &schatten_norm, py::arg("spectrum"), py::arg("p"),
        "(sum s_k^p)^(1/p)");
  m.def("fit_tail_exponent", &fit_tail_exponent, py::arg("spectrum"),
        py::arg("k_min") = 0, "log-log slope of the singular value tail");

  m.def("predict_r_main", &predict_r_main, py::arg("p1"), py::arg("p2"),
        "Schatten exponent 1/r = 1/2 + 1/p1 + 1/p2");
  m.def("predict_r_mixed", &predict_r_mixed, py::arg("q"), py::arg("ps"),
        "Schatten exponent 1/r = 1/q' + sum 1/p_i");
  m.def("predict_decay", &predict_decay, py::arg("p1"), py::arg("p2"),
        py::arg("q") = 2.0, "decay rate (1 - 1/q) + 1/p1 + 1/p2");
  m.def("riesz_constant", &riesz_constant, py::arg("alpha"),
        "normalizing constant of the one-dimensional Riesz kernel");

  m.def(
      "carleman_singular_values",
      [](int blocks, int mode_cap) {
        return carleman_operator(carleman_coefficients(blocks), mode_cap).exact;
      },
      py::arg("blocks") = 8, py::arg("mode_cap") = 4095,
      "exact singular values of the flat-polynomial convolution operator");

  m.def("experiments", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : experiment_registry()) out.emplace_back(e.name, e.summary);
    return out;
  });

  m.def(
      "run_experiment",
      [](const std::string& name, const std::map<std::string, std::string>& params,
         std::uint64_t seed, const std::string& out_dir) {
        ExperimentConfig cfg;
        cfg.name = name;
        cfg.params = params;
        cfg.seed = seed;
        const ExperimentResult res = run_experiment(cfg);
        if (!out_dir.empty()) write_outputs(res, out_dir);
        return py::make_tuple(res.exit_code, res.report.dump(2), res.spectrum);
      },
      py::arg("name"), py::arg("params") = std::map<std::string, std::string>{},
      py::arg("seed") = std::uint64_t{1}, py::arg("out_dir") = std::string{},
      "run one registered experiment; returns (exit_code, report_json, spectrum)");
}
