#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lambert/arith.hpp"
#include "lambert/asymptotics.hpp"
#include "lambert/engines.hpp"
#include "lambert/mertens.hpp"
#include "lambert/special.hpp"

namespace py = pybind11;
using namespace lambert;

namespace {

// Tables are heavy; keep them opaque handles on the python side.
struct TableHandle {
    ArithTable table;
};

py::dict report_to_dict(const EvalReport& r) {
    py::dict d;
    d["value"] = r.value;
    d["terms_used"] = r.terms_used;
    d["stop_reason"] = to_string(r.stop_reason);
    d["error_estimate"] = r.error_estimate;
    return d;
}

CoeffFn coeff_for(const std::string& name, const TableHandle& h) {
    Coeff c = coeff_from_name(name);
    if (c == Coeff::one) return coefficient_one();
    return coefficient_source(c, h.table);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Lambert series evaluation engines and number-theoretic scans";

    py::class_<TableHandle>(m, "ArithTable")
        .def_property_readonly(
            "limit", [](const TableHandle& h) { return h.table.limit; })
        .def("divisor_count",
             [](const TableHandle& h, std::uint64_t n) { return h.table.d.at(n); })
        .def("mobius",
             [](const TableHandle& h, std::uint64_t n) {
                 return (int)h.table.mu.at(n);
             })
        .def("euler_phi",
             [](const TableHandle& h, std::uint64_t n) { return h.table.phi.at(n); })
        .def("liouville",
             [](const TableHandle& h, std::uint64_t n) {
                 return (int)h.table.liouville.at(n);
             })
        .def("von_mangoldt",
             [](const TableHandle& h, std::uint64_t n) {
                 return h.table.von_mangoldt.at(n);
             })
        .def("is_prime",
             [](const TableHandle& h, std::uint64_t n) {
                 return bool(h.table.is_prime.at(n));
             })
        .def("chebyshev_theta",
             [](const TableHandle& h, double x) { return chebyshev_theta(x, h.table); })
        .def("chebyshev_psi",
             [](const TableHandle& h, double x) { return chebyshev_psi(x, h.table); })
        .def("prime_reciprocal_sum", [](const TableHandle& h, double x) {
            return prime_reciprocal_sum(x, h.table);
        });

    m.def("build_table",
          [](std::uint64_t limit) { return TableHandle{build_table(limit)}; },
          py::arg("limit"));

    m.def(
        "eval_lambert",
        [](const std::string& coeff, std::complex<double> x,
           const std::string& engine, double tol, std::uint64_t terms, int depth,
           const TableHandle& table) {
            if (engine == "naive")
                return report_to_dict(eval_naive(coeff_for(coeff, table), x, tol, terms));
            if (engine == "power")
                return report_to_dict(eval_power_series(coeff_for(coeff, table), x, terms));
            if (engine == "clausen") {
                if (x.imag() != 0.0)
                    throw std::domain_error("clausen engine requires real x");
                return report_to_dict(eval_clausen(x.real(), tol));
            }
            if (engine == "eisenstein-q")
                return report_to_dict(eval_eisenstein_qseries(x, terms));
            if (engine == "eisenstein-cf") {
                if (x.imag() != 0.0)
                    throw std::domain_error("eisenstein-cf engine requires real x");
                return report_to_dict(eval_eisenstein_cf(x.real(), depth));
            }
            throw std::invalid_argument("unknown engine: " + engine);
        },
        py::arg("coeff"), py::arg("x"), py::arg("engine") = "naive",
        py::arg("tol") = 1e-12, py::arg("terms") = kDefaultTermCap,
        py::arg("depth") = 60, py::arg("table"));

    m.def(
        "identity_residual",
        [](const std::string& name, double x, double tol, const TableHandle& h) {
            return identity_residual(coeff_from_name(name), x, tol, h.table);
        },
        py::arg("name"), py::arg("x"), py::arg("tol") = 1e-14, py::arg("table"));

    m.def("wigert_expansion", [](int n) {
        auto e = wigert_expansion(n);
        py::dict d;
        d["leading"] = std::vector<std::string>{"gamma/z", "-log(z)/z", "1/4"};
        d["odd_coeffs"] = e.odd_coeffs;
        d["order"] = e.order;
        return d;
    });
    m.def("wigert_eval", &wigert_eval, py::arg("z"), py::arg("order") = 3);
    m.def(
        "dseries_direct",
        [](std::complex<double> z, const TableHandle& h) {
            return dseries_direct(z, h.table);
        },
        py::arg("z"), py::arg("table"));
    m.def("dseries_reciprocal_form", &dseries_reciprocal_form, py::arg("xi"));
    m.def(
        "voronoi_rhs",
        [](double x, int n_terms, const TableHandle& h) {
            return voronoi_rhs(x, n_terms, h.table);
        },
        py::arg("x"), py::arg("n_terms") = 50, py::arg("table"));
    m.def(
        "tauber_h",
        [](double x, const TableHandle& h) { return tauber_h(x, h.table); },
        py::arg("x"), py::arg("table"));

    m.def("zeta_real", [](double s) { return ZetaEvaluator{}(s); }, py::arg("s"));
    m.def(
        "prime_zeta",
        [](double s, const TableHandle& h) { return prime_zeta(s, h.table); },
        py::arg("s"), py::arg("table"));
    m.def("exp_integral_ei", &exp_integral_ei, py::arg("x"));
    m.def("ei_symmetric_combo", &ei_symmetric_combo, py::arg("y"));

    m.def(
        "mertens_report",
        [](const TableHandle& h) {
            auto r = compute_mertens_report(h.table);
            py::dict d;
            d["H_mobius"] = r.H_mobius;
            d["H_direct"] = r.H_direct;
            d["agreement"] = r.agreement;
            d["terms_mobius"] = r.terms_mobius;
            d["prime_limit_direct"] = r.prime_limit_direct;
            d["m_cap_direct"] = r.m_cap_direct;
            return d;
        },
        py::arg("table"));

    m.def(
        "singularity_probe",
        [](std::uint64_t p, std::uint64_t q, double r, double tol) {
            auto s = singularity_probe(p, q, r, tol);
            py::dict d;
            d["major_arc"] = s.major_arc;
            d["minor_arc"] = s.minor_arc;
            d["major_lower_bound"] = s.major_lower_bound;
            d["minor_upper_bound"] = s.minor_upper_bound;
            return d;
        },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("tol") = 1e-10);

    m.attr("MERTENS_H") = kMertensH;
    m.attr("EULER_GAMMA") = kEulerGamma;
}
