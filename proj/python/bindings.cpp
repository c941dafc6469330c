#include "schro/bench.hpp"
#include "schro/error.hpp"
#include "schro/kernels.hpp"

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace schro;

namespace {

RunConfig config_from(const std::map<std::string, std::string>& settings)
{
    Settings s;
    for (const auto& [k, v] : settings)
        apply_setting(s, k + "=" + v);
    return resolve_config(s);
}

} // namespace

PYBIND11_MODULE(_schro, m)
{
    m.doc() = "High-order cubature for the free Schroedinger equation";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<OrderTooLarge>(m, "OrderTooLarge", base.ptr());
    py::register_exception<ToleranceNotReached>(m, "ToleranceNotReached", base.ptr());

    m.def("faddeeva", &faddeeva, py::arg("z"));
    m.def("erfc_complex", &erfc_complex, py::arg("z"));
    m.def("laguerre", &laguerre, py::arg("k"), py::arg("gamma"), py::arg("z"));
    m.def("hermite", py::overload_cast<int, cplx>(&hermite), py::arg("k"), py::arg("z"));

    m.def("chi", &chi, py::arg("M"), py::arg("x"));
    m.def("saturation_bound", &saturation_bound, py::arg("M"), py::arg("D"), py::arg("alpha_order") = 0);
    m.def("hestenes_coeffs", &hestenes_coeffs, py::arg("alphas"), py::arg("N"));

    m.def("phi_factor", &phi_factor, py::arg("M"), py::arg("x"), py::arg("t"));
    m.def("psi", &psi, py::arg("M"), py::arg("x"), py::arg("t"), py::arg("y"));
    m.def("box_factor", &box_factor, py::arg("M"), py::arg("x"), py::arg("t"), py::arg("P"), py::arg("Q"));

    m.def(
        "integrate_0_to_t",
        [](const std::function<cplx(double)>& f, double t, double a, double kappa, long R) {
            return integrate_0_to_t(f, t, MoriRule{a, kappa, R});
        },
        py::arg("f"), py::arg("t"), py::arg("a") = 1.0, py::arg("kappa") = 0.05, py::arg("R") = 120);

    m.def("exact_gaussian_box", &exact_gaussian_box, py::arg("a"), py::arg("x"), py::arg("t"));
    m.def(
        "table3_field",
        [](int M, double h, const std::vector<double>& x, double t) {
            return problems::table3_field(M, h, Extension1D::Mode::hestenes, HestenesScheme::harmonic(2 * M), x, t);
        },
        py::arg("M"), py::arg("h"), py::arg("x"), py::arg("t") = 1.0);

    m.def(
        "run_convergence",
        [](const std::map<std::string, std::string>& settings, unsigned threads) {
            const RunConfig cfg = config_from(settings);
            py::list rows;
            for (const auto& r : run_convergence(cfg, threads)) {
                py::dict d;
                d["n"] = r.n;
                d["M"] = r.M;
                d["h"] = r.h;
                d["tau"] = r.tau ? py::object(py::float_(*r.tau)) : py::object(py::none());
                d["abs_error"] = r.abs_error;
                d["rate"] = r.rate ? py::object(py::float_(*r.rate)) : py::object(py::none());
                rows.append(d);
            }
            return rows;
        },
        py::arg("settings"), py::arg("threads") = 1);

    m.def(
        "convergence_csv",
        [](const std::map<std::string, std::string>& settings) {
            const RunConfig cfg = config_from(settings);
            std::ostringstream os;
            write_convergence_csv(os, cfg, run_convergence(cfg));
            return os.str();
        },
        py::arg("settings"));

    m.def("selftest", [] {
        py::list out;
        for (const auto& r : run_selftest()) {
            py::dict d;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["measured"] = r.measured;
            d["tolerance"] = r.tolerance;
            out.append(d);
        }
        return out;
    });
}
