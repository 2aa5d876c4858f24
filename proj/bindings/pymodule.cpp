#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "conelat/albert.hpp"
#include "conelat/io.hpp"
#include "conelat/rp5.hpp"
#include "conelat/sections.hpp"
#include "conelat/suites.hpp"

namespace py = pybind11;
using namespace conelat;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "verification core: psd cone facial geometry, face lattices, the "
      "Albert plane, and the seven-point configuration in R^5";

  m.def("predicted_dimension", &predicted_dimension, py::arg("n_rank"),
        py::arg("d"),
        "n(n-1)/2*d + n - 1: dimension of the rank-n body over a degree-d "
        "coordinate algebra");

  m.def(
      "herm_dim",
      [](const std::string& field, int n) {
        return herm_dim(field_from_name(field), n);
      },
      py::arg("field"), py::arg("n"),
      "real dimension of the Hermitian n x n matrices over R/C/H/O");

  m.def(
      "run_json",
      [](const std::string& subcommand, const std::string& field, int n,
         int trials, double tol, std::uint64_t seed,
         const std::string& shape) {
        RunConfig cfg;
        cfg.subcommand = subcommand;
        cfg.field = field;
        cfg.n = n;
        cfg.trials = trials;
        cfg.tol = tol;
        cfg.seed = seed;
        cfg.shape = shape;
        return dump_canonical(run_record(cfg, run_suite(cfg)));
      },
      py::arg("subcommand"), py::arg("field") = "", py::arg("n") = 0,
      py::arg("trials") = 0, py::arg("tol") = 0.0,
      py::arg("seed") = std::uint64_t{20260815}, py::arg("shape") = "",
      "run a verification suite and return the structured record as JSON");

  m.def(
      "modularity_json",
      [](const std::string& shape) {
        return dump_canonical(to_json(check_polytope_shape(shape)));
      },
      py::arg("shape"),
      "face-lattice modularity report for one corpus polytope");

  m.def(
      "sections_demo_json",
      [](const std::string& field, int n, int trials, std::uint64_t seed) {
        Field f = field_from_name(field);
        if (f == Field::O) throw UsageError("sections supports R, C, H");
        if (n < 2 || n > 5) throw UsageError("sections: n must lie in 2..5");
        return dump_canonical(to_json(sections_demo(f, n, trials, seed)));
      },
      py::arg("field") = "R", py::arg("n") = 3, py::arg("trials") = 40,
      py::arg("seed") = std::uint64_t{20260815},
      "non-compact E11 section walkthrough: recession rays, parallel "
      "classes, affine axiom sampling");

  m.def("combined_condition_str",
        [] { return combined_condition().str(); });

  m.def(
      "factor_condition_strs",
      [](long long c_num, long long c_den, long long d_num, long long d_den) {
        auto [lin, quad] = factor_condition(Rational(c_num) / Rational(c_den),
                                            Rational(d_num) / Rational(d_den));
        return std::make_pair(lin.str(), quad.str());
      },
      py::arg("c_num"), py::arg("c_den"), py::arg("d_num"), py::arg("d_den"),
      "exact linear x quadratic factorization of the combined condition at "
      "rational (c, d)");

  m.def("incidence_triples", [] { return incidence_triples(); },
        "derived point triples S1..S6 of the seven-point configuration");
  m.def("incidence_reference", [] { return incidence_reference(); });

  m.def(
      "chart_idempotent_residual",
      [](const std::vector<double>& x, const std::vector<double>& y) {
        if (x.size() != 8 || y.size() != 8)
          throw UsageError("an octonion needs 8 coefficients");
        Alg ax(Field::O), ay(Field::O);
        for (int i = 0; i < 8; ++i) {
          ax[i] = x[i];
          ay[i] = y[i];
        }
        AlbertElement p = chart_point(ax, ay);
        return std::max(fro_norm(jordan(p, p) - p),
                        std::abs(trace(p) - 1.0));
      },
      py::arg("x"), py::arg("y"),
      "max of |p o p - p| and |tr p - 1| for the chart point of (x, y)");
}
