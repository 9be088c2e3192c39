#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trigdunkl/errors.hpp"
#include "trigdunkl/kernel.hpp"
#include "trigdunkl/operators.hpp"
#include "trigdunkl/quadrature.hpp"
#include "trigdunkl/specfun.hpp"
#include "trigdunkl/verify.hpp"

namespace py = pybind11;
using namespace trigdunkl;

namespace {

QuadratureConfig quad_config(int jacobi_nodes, int level, int outer_level, int pairing_level) {
    QuadratureConfig q;
    q.jacobi_nodes = jacobi_nodes;
    q.tanh_sinh_level = level;
    q.outer_level = outer_level;
    q.pairing_level = pairing_level;
    return q;
}

py::tuple rule_tuple(const QuadratureRule& r) {
    return py::make_tuple(std::vector<double>(r.nodes().begin(), r.nodes().end()),
                          std::vector<double>(r.weights().begin(), r.weights().end()));
}

}  // namespace

PYBIND11_MODULE(_trigdunkl, m) {
    m.doc() = "Trigonometric Dunkl intertwining operator in rank one";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ContractError>(m, "ContractError", PyExc_TypeError);
    py::register_exception<NonConvergenceError>(m, "NonConvergenceError", PyExc_RuntimeError);
    py::register_exception<EvaluationError>(m, "EvaluationError", PyExc_ArithmeticError);

    py::class_<Multiplicity>(m, "Multiplicity")
        .def(py::init<std::complex<double>, std::complex<double>>(), py::arg("k1"), py::arg("k2"))
        .def_property_readonly("k1", &Multiplicity::k1)
        .def_property_readonly("k2", &Multiplicity::k2)
        .def_property_readonly("rho", &Multiplicity::rho)
        .def_property_readonly("real_positive", &Multiplicity::real_positive)
        .def("__repr__", [](const Multiplicity& k) {
            return "Multiplicity(" + py::repr(py::cast(k.k1())).cast<std::string>() + ", " +
                   py::repr(py::cast(k.k2())).cast<std::string>() + ")";
        });

    py::class_<EvalResult>(m, "EvalResult")
        .def_readonly("value", &EvalResult::value)
        .def_readonly("est_error", &EvalResult::est_error)
        .def_readonly("method", &EvalResult::method)
        .def("__repr__", [](const EvalResult& r) {
            return "EvalResult(value=" + py::repr(py::cast(r.value)).cast<std::string>() +
                   ", est_error=" + py::repr(py::cast(r.est_error)).cast<std::string>() + ", method='" + r.method +
                   "')";
        });

    py::class_<TestFunction>(m, "TestFunction")
        .def(py::init([](const std::string& id, double param) { return test_function_from_id(id, param); }),
             py::arg("id"), py::arg("param") = 0.0)
        .def_static("bump", &TestFunction::bump, py::arg("radius"), py::arg("centre") = 0.0)
        .def_static("gaussian", &TestFunction::gaussian, py::arg("centre") = 0.0)
        .def_property_readonly("id", &TestFunction::id)
        .def_property_readonly("support", &TestFunction::support)
        .def("__call__", &TestFunction::operator(), py::arg("x"))
        .def("derivative", &TestFunction::derivative, py::arg("x"))
        .def("scaled", &TestFunction::scaled, py::arg("factor"));

    // special functions
    m.def("gamma_real", &gamma_real, py::arg("x"));
    m.def(
        "hyp2f1",
        [](std::complex<double> a, std::complex<double> b, std::complex<double> c, double z) {
            return hyp2f1({a, b, c, z});
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));
    m.def(
        "jacobi_phi",
        [](std::complex<double> alpha, std::complex<double> beta, std::complex<double> lam, double t) {
            return jacobi_phi(alpha, beta, SpectralParam(lam), t);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("lam"), py::arg("t"));
    m.def(
        "opdam_G",
        [](const Multiplicity& k, std::complex<double> lam, double x) { return opdam_G(k, SpectralParam(lam), x); },
        py::arg("k"), py::arg("lam"), py::arg("x"));

    // quadrature rules as (nodes, weights)
    m.def("gauss_legendre", [](int n) { return rule_tuple(gauss_legendre(n)); }, py::arg("n"));
    m.def(
        "gauss_jacobi", [](int n, double a, double b) { return rule_tuple(gauss_jacobi(n, a, b)); }, py::arg("n"),
        py::arg("alpha"), py::arg("beta"));
    m.def("tanh_sinh", [](int level) { return rule_tuple(tanh_sinh(level)); }, py::arg("level"));

    // kernel
    m.def("weight_A", &weight_A, py::arg("k"), py::arg("x"));
    m.def("constant_c", &constant_c, py::arg("k"));
    m.def("sigma", &sigma, py::arg("x"), py::arg("y"), py::arg("z"));
    m.def(
        "kernel_K",
        [](const Multiplicity& k, double x, double y, const std::string& method, int jacobi_nodes, int level) {
            const QuadratureConfig q = quad_config(jacobi_nodes, level, 8, 7);
            if (method == "direct") return kernel_K(k, KernelPoint(x, y), q);
            if (method == "mourou") return kernel_K_mourou(k, KernelPoint(x, y), q);
            throw DomainError("method must be 'direct' or 'mourou'");
        },
        py::arg("k"), py::arg("x"), py::arg("y"), py::arg("method") = "direct", py::arg("jacobi_nodes") = 64,
        py::arg("level") = 8);
    m.def(
        "kernel_K_limit_k1zero", [](double k2, double x, double y) { return kernel_K_limit_k1zero(k2, KernelPoint(x, y)); },
        py::arg("k2"), py::arg("x"), py::arg("y"));
    m.def(
        "kernel_K_limit_k2zero", [](double k1, double x, double y) { return kernel_K_limit_k2zero(k1, KernelPoint(x, y)); },
        py::arg("k1"), py::arg("x"), py::arg("y"));

    // operators
    m.def(
        "cherednik_D",
        [](const Multiplicity& k, const TestFunction& f, double x, const std::string& form) {
            if (form == "regularized") return cherednik_D(k, f, x, DForm::regularized, AtOrigin::limit);
            if (form == "cothtanh") return cherednik_D(k, f, x, DForm::cothtanh, AtOrigin::limit);
            throw DomainError("form must be 'regularized' or 'cothtanh'");
        },
        py::arg("k"), py::arg("f"), py::arg("x"), py::arg("form") = "regularized");
    m.def(
        "apply_V",
        [](const Multiplicity& k, const TestFunction& f, double x, int outer_level) {
            QuadratureConfig q;
            q.outer_level = outer_level;
            return apply_V(k, f, x, q);
        },
        py::arg("k"), py::arg("f"), py::arg("x"), py::arg("outer_level") = 8,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "apply_Vt",
        [](const Multiplicity& k, const TestFunction& g, double y, int outer_level) {
            QuadratureConfig q;
            q.outer_level = outer_level;
            return apply_Vt(k, g, y, q);
        },
        py::arg("k"), py::arg("g"), py::arg("y"), py::arg("outer_level") = 8,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "duality_gap", [](const Multiplicity& k, const TestFunction& f, const TestFunction& g) {
            return duality_gap(k, f, g);
        },
        py::arg("k"), py::arg("f"), py::arg("g"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "intertwine_gap", [](const Multiplicity& k, const TestFunction& f, double x) { return intertwine_gap(k, f, x); },
        py::arg("k"), py::arg("f"), py::arg("x"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "positivity_scan",
        [](std::vector<double> k1, std::vector<double> k2, std::vector<double> x, std::vector<double> fractions) {
            const ScanReport r = positivity_scan(ScanGrid{std::move(k1), std::move(k2), std::move(x), std::move(fractions)});
            py::list cells;
            for (const ScanCell& c : r.cells) cells.append(py::make_tuple(c.k1, c.k2, c.x, c.y, c.value));
            py::dict out;
            out["cells"] = cells;
            out["min_value"] = r.min_value;
            out["argmin"] = r.argmin;
            out["all_positive"] = r.all_positive;
            return out;
        },
        py::arg("k1"), py::arg("k2"), py::arg("x"), py::arg("fractions"));

    m.def(
        "run_suite",
        [](const std::string& name, std::optional<double> tol) {
            const std::optional<Suite> suite = parse_suite(name);
            if (!suite) throw DomainError("unknown suite '" + name + "'");
            std::vector<CheckRow> rows;
            {
                py::gil_scoped_release release;
                rows = run_suite(*suite, NumericConfig{}, tol);
            }
            py::list out;
            for (const CheckRow& r : rows) {
                py::dict d;
                d["check"] = r.check;
                d["point"] = r.point;
                d["lhs"] = r.lhs;
                d["rhs"] = r.rhs;
                d["gap"] = r.gap;
                d["tol"] = r.tol;
                d["pass"] = r.pass;
                out.append(d);
            }
            return out;
        },
        py::arg("suite"), py::arg("tol") = py::none());
}
