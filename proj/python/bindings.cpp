// Python bindings: case verification, reports, symbols and a few kernels on numpy arrays.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "specres/diagonal.hpp"
#include "specres/error.hpp"
#include "specres/harness.hpp"
#include "specres/kernels.hpp"
#include "specres/report.hpp"
#include "specres/resolutions.hpp"
#include "specres/specfun.hpp"

namespace py = pybind11;
using namespace specres;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;
using DArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

GridFunction on_space(const Space& space, const CArray& values) {
    if (values.ndim() != 1 || static_cast<std::size_t>(values.shape(0)) != space->size()) {
        throw InvalidArgument("expected a 1-d array of " + std::to_string(space->size()) + " samples");
    }
    return GridFunction(space, std::vector<cplx>(values.data(), values.data() + values.shape(0)));
}

CArray to_array(const GridFunction& f) {
    CArray out(static_cast<py::ssize_t>(f.values().size()));
    std::copy(f.values().begin(), f.values().end(), out.mutable_data());
    return out;
}

DArray points(const Space& space) {
    DArray out(static_cast<py::ssize_t>(space->size()));
    std::copy(space->points().begin(), space->points().end(), out.mutable_data());
    return out;
}

CArray map_t(const DArray& t, const std::function<cplx(double)>& f) {
    CArray out(t.size());
    for (py::ssize_t k = 0; k < t.size(); ++k) out.mutable_data()[k] = f(t.data()[k]);
    return out;
}

CaseParams make_params(std::optional<double> m, std::optional<int> ell, std::optional<double> a,
                       std::optional<double> b, std::optional<double> mass) {
    CaseParams p;
    if (m) p.m = *m;
    if (ell) p.ell = *ell;
    if (a) p.a = *a;
    if (b) p.b = *b;
    if (mass) p.mass = *mass;
    return p;
}

}  // namespace

PYBIND11_MODULE(_specres, mod) {
    mod.doc() = "Kernel quadrature and spectral resolutions of singular integral operators";

    auto base = py::register_exception<Error>(mod, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(mod, "InvalidArgument", base.ptr());
    py::register_exception<GridMismatch>(mod, "GridMismatch", base.ptr());
    py::register_exception<NonFiniteSample>(mod, "NonFiniteSample", base.ptr());
    py::register_exception<NumericalRejection>(mod, "NumericalRejection", base.ptr());

    mod.def("cases", [] {
        std::vector<std::string> out;
        for (const auto c : all_cases()) out.emplace_back(case_id(c));
        return out;
    });

    mod.def(
        "verify_json",
        [](const std::string& name, std::optional<double> m, std::optional<int> ell, std::optional<double> a,
           std::optional<double> b, std::optional<double> mass, std::optional<std::size_t> n, std::optional<double> L,
           std::optional<double> U, std::optional<std::size_t> spectral_n, std::optional<double> tolerance,
           std::size_t corpus_size) {
            const GridConfig grid{n, L, U, spectral_n};
            auto c = build_case(parse_case(name), make_params(m, ell, a, b, mass), grid);
            if (tolerance) c.tolerance = *tolerance;
            py::gil_scoped_release release;
            return to_json(evaluate_case(c, corpus_size));
        },
        py::arg("case"), py::kw_only(), py::arg("m") = py::none(), py::arg("ell") = py::none(),
        py::arg("a") = py::none(), py::arg("b") = py::none(), py::arg("mass") = py::none(), py::arg("n") = py::none(),
        py::arg("L") = py::none(), py::arg("U") = py::none(), py::arg("spectral_n") = py::none(),
        py::arg("tolerance") = py::none(), py::arg("corpus_size") = 0);

    mod.def(
        "report_json",
        [](bool probes) {
            RunConfig cfg;
            cfg.probes = probes;
            py::gil_scoped_release release;
            return to_json(run_all(cfg));
        },
        py::arg("probes") = true);

    mod.def("xi_symbol", [](double m, const DArray& t) { return map_t(t, [m](double x) { return xi_symbol(m, x); }); },
            py::arg("m"), py::arg("t"));
    mod.def("phi_ell", [](int ell, const DArray& t) { return map_t(t, [ell](double x) { return phi_ell(ell, x); }); },
            py::arg("ell"), py::arg("t"));
    mod.def(
        "kernel_symbol",
        [](const std::string& kernel, const DArray& t, double m) {
            const auto sym = symbol_from_homogeneous_kernel(builtin_kernel(kernel, m));
            return map_t(t, sym.eval);
        },
        py::arg("kernel"), py::arg("t"), py::kw_only(), py::arg("m") = 0.0,
        "Symbol of a built-in homogeneous kernel (stieltjes, hardy, j_hankel) extracted by quadrature");

    mod.def("line_points", [](double half_width, std::size_t n) { return points(make_space(UniformGrid::symmetric(half_width, n))); },
            py::arg("half_width"), py::arg("n"));
    mod.def("log_points", [](double half_width, std::size_t n) { return points(make_space(LogGrid::symmetric(half_width, n))); },
            py::arg("half_width"), py::arg("n"));

    mod.def(
        "hilbert_pv",
        [](const CArray& f, double half_width) {
            return to_array(hilbert_pv(on_space(make_space(UniformGrid::symmetric(half_width, f.size())), f)));
        },
        py::arg("f"), py::arg("half_width"), "P.v. Hilbert transform of samples on line_points(half_width, len(f))");
    mod.def(
        "hilbert_multiplier",
        [](const CArray& f, double half_width) {
            return to_array(hilbert_multiplier(on_space(make_space(UniformGrid::symmetric(half_width, f.size())), f)));
        },
        py::arg("f"), py::arg("half_width"));
    mod.def(
        "hankel",
        [](double m, const CArray& f, double half_width) {
            return to_array(hankel(m, on_space(make_space(LogGrid::symmetric(half_width, f.size())), f)));
        },
        py::arg("m"), py::arg("f"), py::arg("half_width"), "Hankel transform of samples on log_points(half_width, len(f))");
    mod.def(
        "apply_xi",
        [](double m, const CArray& f, double half_width) {
            const Symbol xi{"Xi_m", [m](double t) { return xi_symbol(m, t); }, {}, {}};
            return to_array(apply_symbol_A(xi, on_space(make_space(LogGrid::symmetric(half_width, f.size())), f)));
        },
        py::arg("m"), py::arg("f"), py::arg("half_width"), "Xi_m(A) applied on log_points(half_width, len(f))");
    mod.def(
        "inversion_j",
        [](const CArray& f, double half_width) {
            return to_array(inversion_j(on_space(make_space(LogGrid::symmetric(half_width, f.size())), f)));
        },
        py::arg("f"), py::arg("half_width"));
}
