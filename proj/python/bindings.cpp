// Python bindings for the fockop core: spaces, symbols, kernels, radial
// eigenvalues, and the truncated-operator diagnostics.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fockop/gamma.hpp"
#include "fockop/mellin.hpp"
#include "fockop/mittag_leffler.hpp"
#include "fockop/quadrature.hpp"
#include "fockop/space.hpp"
#include "fockop/symbol.hpp"
#include "fockop/toeplitz.hpp"

namespace py = pybind11;
using namespace fockop;

namespace {

py::dict report_dict(const ResidualReport& r) {
    py::dict bands;
    for (const auto& [band, mass] : r.band_mass) bands[py::int_(band)] = mass;
    py::dict d;
    d["frobenius_residual"] = r.frobenius_residual;
    d["max_entry_residual"] = r.max_entry_residual;
    d["raw_frobenius"] = r.raw_frobenius;
    d["raw_max_entry"] = r.raw_max_entry;
    d["normalizer"] = r.normalizer;
    d["degree"] = r.degree;
    d["interior_degree"] = r.interior_degree;
    d["window_capped"] = r.window_capped;
    d["band_mass"] = bands;
    return d;
}

QuadSpec quad_from(int n_r, int n_theta) { return QuadSpec{n_r, n_theta, DEOptions{}}; }

}  // namespace

PYBIND11_MODULE(_fockop, m) {
    m.doc() = "Toeplitz operators on generalized Fock spaces";

    py::class_<SpaceParams>(m, "SpaceParams")
        .def(py::init<int, double, double, double>(), py::arg("d"), py::arg("m"),
             py::arg("alpha") = 1.0, py::arg("s") = 0.0)
        .def_readonly("d", &SpaceParams::d)
        .def_readonly("m", &SpaceParams::m)
        .def_readonly("alpha", &SpaceParams::alpha)
        .def_readonly("s", &SpaceParams::s)
        .def("__repr__", &SpaceParams::describe);

    py::enum_<Radiality>(m, "Radiality")
        .value("radial", Radiality::radial)
        .value("rotation_invariant", Radiality::rotation_invariant)
        .value("general", Radiality::general);

    py::class_<Symbol>(m, "Symbol")
        .def("__call__",
             [](const Symbol& s, const std::vector<Complex>& z) { return s.eval(z); })
        .def_property_readonly("dimension", &Symbol::dimension)
        .def_property_readonly("radiality", &Symbol::radiality)
        .def_property_readonly("is_radial", &Symbol::is_radial)
        .def_property_readonly("polar_radial", &Symbol::polar_radial)
        .def_property_readonly("degree_window",
                               [](const Symbol& s) -> py::object {
                                   if (auto w = s.degree_window()) return py::int_(*w);
                                   return py::none();
                               })
        .def_property_readonly("description", &Symbol::description)
        .def("conjugated", &Symbol::conjugated)
        .def("__repr__",
             [](const Symbol& s) { return "Symbol(" + s.description() + ")"; });

    m.def("parse_symbol", &parse_symbol, py::arg("text"), py::arg("d"));
    m.def("constant", &catalog::constant, py::arg("value"), py::arg("d"));
    m.def("radial_power", &catalog::radial_power, py::arg("p"), py::arg("d"));
    m.def("exp_radial", &catalog::exp_radial, py::arg("lambda_"), py::arg("m"), py::arg("d"));
    m.def("direction_power", &catalog::direction_power, py::arg("axis"), py::arg("N"),
          py::arg("d"));
    m.def("radial_indicator", &catalog::radial_indicator, py::arg("R"), py::arg("d"));

    m.def("normalization_constant", &normalization_constant);
    m.def(
        "moment",
        [](const SpaceParams& p, const std::vector<int>& nu) {
            return moment(p, MultiIndex(nu));
        },
        py::arg("params"), py::arg("nu"));
    m.def(
        "orthonormal_coefficient",
        [](const SpaceParams& p, const std::vector<int>& nu) {
            return orthonormal_coefficient(p, MultiIndex(nu));
        },
        py::arg("params"), py::arg("nu"));
    m.def(
        "graded_basis",
        [](const SpaceParams& p, int D) {
            std::vector<std::vector<int>> out;
            for (const auto& nu : graded_basis(p, D)) out.push_back(nu.entries());
            return out;
        },
        py::arg("params"), py::arg("D"));

    m.def(
        "ml_eval",
        [](double beta, double gamma, int order, Complex z) {
            return ml_eval(MLParams(beta, gamma, order), z);
        },
        py::arg("beta"), py::arg("gamma"), py::arg("order"), py::arg("z"));
    m.def("kernel_eval",
          [](const SpaceParams& p, const std::vector<Complex>& xi,
             const std::vector<Complex>& zeta) { return kernel_eval(p, xi, zeta); });
    m.def("kernel_asymptotic_ratio",
          [](const SpaceParams& p, double t) { return kernel_asymptotic_ratio(p, t); });

    m.def(
        "radial_rule",
        [](const SpaceParams& p, int n) {
            const RadialRule rule = build_radial_rule(p, n);
            return py::make_tuple(rule.nodes, rule.weights);
        },
        py::arg("params"), py::arg("n"));
    m.def(
        "integrate",
        [](const SpaceParams& p, const Symbol& g, int n_r, int n_theta) {
            return p.d == 1 ? integrate_c1(p, g, n_r, n_theta)
                            : integrate_c2(p, g, n_r, n_theta);
        },
        py::arg("params"), py::arg("g"), py::arg("n_r") = 60, py::arg("n_theta") = 64);

    m.def("omega", &omega, py::arg("f"), py::arg("zeta"), py::arg("params"));
    m.def(
        "omega_quadrature",
        [](const Symbol& f, Complex zeta, const SpaceParams& p) {
            return omega_quadrature(f, zeta, p);
        },
        py::arg("f"), py::arg("zeta"), py::arg("params"));
    m.def("gamma_quotient_kernel", &gamma_quotient_kernel, py::arg("a"), py::arg("b"),
          py::arg("m"), py::arg("r"));
    m.def(
        "gamma_quotient_mellin",
        [](double a, double b, double m_, Complex z) {
            return gamma_quotient_mellin(a, b, m_, z);
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("z"));
    m.def(
        "period_scan",
        [](const Symbol& f1, const Symbol& f2, const SpaceParams& p, int n_lo, int n_hi,
           double tol) {
            PeriodScanSpec spec;
            spec.tol = tol;
            const auto rep = period_scan(f1, f2, p, n_lo, n_hi, spec);
            py::dict dev;
            for (const auto& [n, v] : rep.max_rel_deviation) dev[py::int_(n)] = v;
            py::dict out;
            out["matches"] = std::vector<int>(rep.matches.begin(), rep.matches.end());
            out["max_rel_deviation"] = dev;
            return out;
        },
        py::arg("f1"), py::arg("f2"), py::arg("params"), py::arg("n_lo") = -5,
        py::arg("n_hi") = 5, py::arg("tol") = 1e-8);

    m.def("v_transform", &v_transform, py::arg("g"), py::arg("t"), py::arg("params"));
    m.def("radialize", &radialize, py::arg("g"), py::arg("r"), py::arg("n_theta") = 64);
    m.def(
        "g_transform",
        [](const Symbol& g, const std::vector<Complex>& z, const SpaceParams& p, int n_r,
           int n_theta) { return g_transform(g, z, p, quad_from(n_r, n_theta)); },
        py::arg("g"), py::arg("z"), py::arg("params"), py::arg("n_r") = 60,
        py::arg("n_theta") = 64);
    m.def(
        "dc_norm_estimate",
        [](const Symbol& g, double c, const SpaceParams& p) { return dc_norm_estimate(g, c, p); },
        py::arg("g"), py::arg("c"), py::arg("params"));

    m.def(
        "build_matrix",
        [](const Symbol& g, const SpaceParams& p, int D, int n_r, int n_theta) {
            const TruncatedOperator op = build_matrix(g, p, D, quad_from(n_r, n_theta));
            std::vector<std::vector<int>> basis;
            for (const auto& nu : op.basis) basis.push_back(nu.entries());
            return py::make_tuple(op.matrix, basis);
        },
        py::arg("g"), py::arg("params"), py::arg("D"), py::arg("n_r") = 60,
        py::arg("n_theta") = 64);
    m.def(
        "project_pointwise",
        [](const Symbol& u, const std::vector<Complex>& z, const SpaceParams& p, int n_r,
           int n_theta) { return project_pointwise(u, z, p, quad_from(n_r, n_theta)); },
        py::arg("u"), py::arg("z"), py::arg("params"), py::arg("n_r") = 60,
        py::arg("n_theta") = 64);
    m.def(
        "commutator_residual",
        [](const Symbol& f, const Symbol& g, const SpaceParams& p, int D, int n_r,
           int n_theta) {
            return report_dict(commutator_residual(f, g, p, D, quad_from(n_r, n_theta)));
        },
        py::arg("f"), py::arg("g"), py::arg("params"), py::arg("D") = 10, py::arg("n_r") = 60,
        py::arg("n_theta") = 64);
    m.def(
        "offblock_mass",
        [](const Symbol& g, const SpaceParams& p, int D, int n_r, int n_theta) {
            return offblock_mass(g, p, D, quad_from(n_r, n_theta));
        },
        py::arg("g"), py::arg("params"), py::arg("D") = 10, py::arg("n_r") = 60,
        py::arg("n_theta") = 64);
    m.def(
        "zero_product_residual",
        [](const Symbol& f, const Symbol& g, const SpaceParams& p, int D, int n_r,
           int n_theta) {
            const auto [a, b] = zero_product_residual(f, g, p, D, quad_from(n_r, n_theta));
            return py::make_tuple(report_dict(a), report_dict(b));
        },
        py::arg("f"), py::arg("g"), py::arg("params"), py::arg("D") = 10, py::arg("n_r") = 60,
        py::arg("n_theta") = 64);
    m.def(
        "equation_residual",
        [](const Symbol& f1, const Symbol& f2, const Symbol& g, const std::vector<int>& k,
           const std::vector<int>& n, const SpaceParams& p, int D_l, int n_r, int n_theta) {
            return report_dict(equation_residual(f1, f2, g, MultiIndex(k), MultiIndex(n), p, D_l,
                                                 quad_from(n_r, n_theta)));
        },
        py::arg("f1"), py::arg("f2"), py::arg("g"), py::arg("k"), py::arg("n"),
        py::arg("params"), py::arg("D_l") = 6, py::arg("n_r") = 60, py::arg("n_theta") = 64);
    m.def(
        "counterexample_check",
        [](int N, const SpaceParams& p, int D, int n_r, int n_theta) {
            return report_dict(counterexample_check(N, p, D, quad_from(n_r, n_theta)));
        },
        py::arg("N"), py::arg("params"), py::arg("D") = 14, py::arg("n_r") = 60,
        py::arg("n_theta") = 64);

    py::register_exception<NumericalError>(m, "NumericalError");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "0.1.0";
#endif
}
