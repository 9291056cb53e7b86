#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "iterroot/api.hpp"

namespace py = pybind11;
using namespace iterroot;

namespace {

api::Options make_opt(bool exact, double tol, unsigned long long seed) {
    api::Options o;
    o.exact = exact;
    o.tol = Tolerance{tol, tol * 1e-3};
    o.seed = seed;
    return o;
}

}  // namespace

// Every function returns the result record serialized as a JSON string; the
// Python package deserializes it, so the wire format matches the CLI exactly.
PYBIND11_MODULE(_core, m) {
    m.doc() = "iterative roots of complex polynomials (JSON-string core)";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);

    m.def(
        "iterate",
        [](const std::string& poly, unsigned n, bool exact, double tol) {
            return api::iterate_cmd(poly, n, make_opt(exact, tol, 1)).dump();
        },
        py::arg("poly"), py::arg("n"), py::arg("exact") = true, py::arg("tol") = 1e-9);

    m.def(
        "compose",
        [](const std::string& f, const std::string& g, bool exact, double tol) {
            return api::compose_cmd(f, g, make_opt(exact, tol, 1)).dump();
        },
        py::arg("f"), py::arg("g"), py::arg("exact") = true, py::arg("tol") = 1e-9);

    m.def(
        "sqrt",
        [](const std::string& quartic, bool exact, double tol) {
            return api::sqrt_cmd(quartic, make_opt(exact, tol, 1)).dump();
        },
        py::arg("quartic"), py::arg("exact") = true, py::arg("tol") = 1e-9);

    m.def(
        "classify",
        [](const std::string& quartic, bool exact, double tol) {
            return api::classify_cmd(quartic, make_opt(exact, tol, 1)).dump();
        },
        py::arg("quartic"), py::arg("exact") = true, py::arg("tol") = 1e-9);

    m.def(
        "curve",
        [](const std::string& beta, bool exact, double tol) {
            return api::curve_cmd(beta, make_opt(exact, tol, 1)).dump();
        },
        py::arg("beta"), py::arg("exact") = true, py::arg("tol") = 1e-9);

    m.def(
        "solve",
        [](const std::string& poly, std::optional<unsigned> deg, std::optional<unsigned> order,
           bool exact, double tol) {
            return api::solve_cmd(poly, deg, order, make_opt(exact, tol, 1)).dump();
        },
        py::arg("poly"), py::arg("deg") = py::none(), py::arg("order") = py::none(),
        py::arg("exact") = true, py::arg("tol") = 1e-9);

    m.def(
        "linroot",
        [](const std::string& a, const std::string& b, unsigned order, bool exact, double tol) {
            return api::linroot_cmd(a, b, order, make_opt(exact, tol, 1)).dump();
        },
        py::arg("a"), py::arg("b"), py::arg("order") = 2, py::arg("exact") = true,
        py::arg("tol") = 1e-9);

    m.def(
        "normalize",
        [](const std::string& poly, bool exact, double tol) {
            return api::normalize_cmd(poly, make_opt(exact, tol, 1)).dump();
        },
        py::arg("poly"), py::arg("exact") = true, py::arg("tol") = 1e-9);

    m.def("verify", [] { return api::verify_cmd().dump(); });

    m.def(
        "selftest",
        [](unsigned long long seed) { return api::selftest_cmd(make_opt(true, 1e-9, seed)).dump(); },
        py::arg("seed") = 1);
}
