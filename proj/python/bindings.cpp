#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include "tropmirror/errors.hpp"
#include "tropmirror/mirror_family.hpp"
#include "tropmirror/picard_fuchs.hpp"
#include "tropmirror/series_json.hpp"
#include "tropmirror/verify.hpp"

namespace py = pybind11;
using namespace tropmirror;

namespace {

std::vector<std::string> strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& r : v) out.push_back(to_string(r));
    return out;
}

// rationals cross the boundary as "p/q" strings; fractions.Fraction parses them
std::vector<std::string> nd_period(int D) {
    const FrobeniusBasis b = frobenius_basis(std::max(D, 3));
    return strings(extract_nd_period(b, canonical_map(b), D).values);
}

std::vector<std::string> nd_scattering(int D) {
    const auto s = ks_complete(initial_structure(AffineChart::p2_cubic()), 3 * D);
    return strings(extract_nd_scattering(f_out(s), D).values);
}

py::dict frobenius(int N) {
    const FrobeniusBasis b = frobenius_basis(N);
    py::dict d;
    d["order"] = b.order;
    d["I1hol"] = strings(b.I1hol().coefficients());
    d["I2hol"] = strings(b.I2hol().coefficients());
    return d;
}

py::dict scatter(int k) {
    const auto s = ks_complete(initial_structure(AffineChart::p2_cubic()), k);
    py::dict d;
    d["order"] = k;
    d["walls"] = s.walls.size();
    d["json"] = to_json(s).dump();
    std::vector<std::tuple<int, int, std::string>> terms;
    const BiSeries log_fout = bi_log(f_out(s));
    for (const auto& [key, c] : log_fout.terms()) terms.emplace_back(key.first, key.second, to_string(c));
    d["log_fout"] = terms;
    return d;
}

py::dict verify(int D) {
    const VerifyReport r = run_verify(D);
    py::dict d;
    d["passed"] = r.passed();
    d["period"] = strings(r.period.values);
    d["scattering"] = strings(r.scattering.values);
    d["json"] = r.to_json().dump();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact two-pipeline mirror checks for the plane cubic pair";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    m.def("closed_form_I1_coeff", [](int d) { return to_string(closed_form_I1_coeff(d)); });
    m.def("frobenius_basis", &frobenius, py::arg("order"));
    m.def("convergence_radius_estimate", [](int order, int window) {
        return convergence_radius_estimate(frobenius_basis(order).I1hol(), window);
    }, py::arg("order"), py::arg("window") = 10);
    m.def("extract_nd_period", &nd_period, py::arg("max_degree"));
    m.def("extract_nd_scattering", &nd_scattering, py::arg("max_degree"));
    m.def("scatter", &scatter, py::arg("order"));
    m.def("render_diagram", [](int k, std::string xmin, std::string xmax, std::string ymin, std::string ymax) {
        const auto s = ks_complete(initial_structure(AffineChart::p2_cubic()), k);
        return render_diagram(s, Window{parse_rational(xmin), parse_rational(xmax), parse_rational(ymin),
                                        parse_rational(ymax)});
    }, py::arg("order"), py::arg("xmin") = "-5", py::arg("xmax") = "12", py::arg("ymin") = "-3",
       py::arg("ymax") = "4");
    m.def("verify", &verify, py::arg("max_degree"));
    m.def("torus_period_quadrature", &torus_period_quadrature, py::arg("t"), py::arg("grid") = 512);
    m.def("w_min_positive", [](double t) {
        const auto r = w_min_positive(t);
        return py::make_tuple(r.value, r.x, r.y);
    });
    m.def("fiber_is_singular", [](std::complex<double> t) { return fiber_singularity_test(t).singular; });
}
