#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hzbound/arith.hpp"
#include "hzbound/bounds.hpp"
#include "hzbound/classnum.hpp"
#include "hzbound/curves.hpp"
#include "hzbound/quadfield.hpp"
#include "hzbound/rational.hpp"
#include "hzbound/reports.hpp"
#include "hzbound/surface.hpp"

namespace py = pybind11;
using namespace hzbound;

namespace {

py::object to_fraction(const Rational& q) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(q.get_str());
}

// One process-wide cache keeps repeated calls fast; the bound operations are
// read-mostly, and Python callers are serialized by the GIL anyway.
classnum::ClassNumberCache& cache() {
    static classnum::ClassNumberCache instance;
    return instance;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Self-intersection numbers of Hirzebruch-Zagier curves and negativity "
              "bounds for Hilbert modular surfaces";

    // arith
    m.def("legendre", &arith::legendre, py::arg("n"), py::arg("p"));
    m.def("divisors", &arith::divisors, py::arg("n"));
    m.def(
        "sigma",
        [](int order, py::object x) {
            static py::object Fraction = py::module_::import("fractions").attr("Fraction");
            py::object fx = Fraction(x);
            Rational q(Rational(fx.attr("numerator").attr("__str__")().cast<std::string>()) /
                       Rational(fx.attr("denominator").attr("__str__")().cast<std::string>()));
            q.canonicalize();
            return arith::sigma(order, q);
        },
        py::arg("order"), py::arg("x"),
        "sigma_k over divisors when x is a positive integer, else 0");
    m.def("sqrt_mod", &arith::sqrt_mod, py::arg("a"), py::arg("p"));
    m.def("loglog", &arith::loglog, py::arg("x"));
    m.def("is_prime", [](std::int64_t n) { return n >= 2 && arith::is_prime(n); });

    py::class_<arith::BoundConstants>(m, "BoundConstants")
        .def_readonly("gamma", &arith::BoundConstants::gamma)
        .def_readonly("delta", &arith::BoundConstants::delta)
        .def_readonly("c", &arith::BoundConstants::c)
        .def_readonly("rh_mode", &arith::BoundConstants::rh_mode)
        .def_static("standard", &arith::BoundConstants::standard)
        .def_static("riemann", &arith::BoundConstants::riemann);

    // classnum
    m.def("class_number", [](std::int64_t d) { return cache().class_number(d); },
          py::arg("d"));
    m.def("h_prime", [](std::int64_t d) { return to_fraction(cache().h_prime(d)); },
          py::arg("d"));
    m.def("hurwitz", [](std::int64_t n) { return to_fraction(cache().hurwitz(n)); },
          py::arg("n"));

    // quadratic field
    py::class_<quadfield::QuadElement>(m, "QuadElement")
        .def_property_readonly("a", [](const quadfield::QuadElement& x) { return to_fraction(x.a); })
        .def_property_readonly("b", [](const quadfield::QuadElement& x) { return to_fraction(x.b); })
        .def_readonly("p", &quadfield::QuadElement::p)
        .def("norm", [](const quadfield::QuadElement& x) { return to_fraction(x.norm()); })
        .def("conjugate", &quadfield::QuadElement::conjugate)
        .def("sign", &quadfield::QuadElement::sign)
        .def("is_totally_positive", &quadfield::QuadElement::is_totally_positive)
        .def("__float__", &quadfield::QuadElement::to_double)
        .def("__mul__", &quadfield::QuadElement::operator*)
        .def("__repr__", [](const quadfield::QuadElement& x) {
            return "QuadElement(" + x.a.get_str() + " + " + x.b.get_str() + "*sqrt(" +
                   std::to_string(x.p) + "))";
        });

    py::class_<quadfield::FundamentalUnit>(m, "FundamentalUnit")
        .def_readonly("eps", &quadfield::FundamentalUnit::eps)
        .def_readonly("norm", &quadfield::FundamentalUnit::norm)
        .def_readonly("eps_plus", &quadfield::FundamentalUnit::eps_plus);
    m.def("fundamental_unit", &quadfield::fundamental_unit, py::arg("p"));

    // curves
    py::class_<curves::HzParams>(m, "HzParams")
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("p"), py::arg("A") = 1)
        .def_readonly("p", &curves::HzParams::p)
        .def_readonly("A", &curves::HzParams::A);

    m.def(
        "class_number_sum",
        [](std::int64_t p, std::int64_t n, std::int64_t A) {
            return to_fraction(curves::class_number_sum(curves::HzParams(p, A), n, cache()));
        },
        py::arg("p"), py::arg("n"), py::arg("A") = 1);
    m.def(
        "class_number_sum_interior",
        [](std::int64_t p, std::int64_t n, std::int64_t A) {
            return to_fraction(
                curves::class_number_sum_interior(curves::HzParams(p, A), n, cache()));
        },
        py::arg("p"), py::arg("n"), py::arg("A") = 1);
    m.def(
        "unit_orbit_sum",
        [](std::int64_t p, std::int64_t n, double tol) {
            return curves::unit_orbit_sum(curves::HzParams(p), n, tol);
        },
        py::arg("p"), py::arg("n"), py::arg("tol") = 1e-10);
    m.def(
        "is_eligible",
        [](std::int64_t p, std::int64_t N, std::int64_t A) {
            return curves::is_eligible(curves::HzParams(p, A), N);
        },
        py::arg("p"), py::arg("N"), py::arg("A") = 1);
    m.def(
        "self_intersection",
        [](std::int64_t p, std::int64_t N, std::int64_t A, bool allow_non_squarefree) {
            return to_fraction(curves::self_intersection(curves::HzParams(p, A), N, cache(),
                                                         allow_non_squarefree));
        },
        py::arg("p"), py::arg("N"), py::arg("A") = 1,
        py::arg("allow_non_squarefree") = false);
    m.def(
        "self_intersection_full",
        [](std::int64_t p, std::int64_t N, std::int64_t A, double tol,
           bool allow_non_squarefree) {
            return curves::self_intersection_full(curves::HzParams(p, A), N, cache(), tol,
                                                  allow_non_squarefree);
        },
        py::arg("p"), py::arg("N"), py::arg("A") = 1, py::arg("tol") = 1e-10,
        py::arg("allow_non_squarefree") = false);
    m.def("split_prime_products", &curves::split_prime_products, py::arg("p"),
          py::arg("n_max"), py::arg("include_one") = false);

    // bounds
    py::enum_<bounds::TnLowerVariant>(m, "TnLowerVariant")
        .value("statement", bounds::TnLowerVariant::statement)
        .value("proof", bounds::TnLowerVariant::proof);
    m.def("paley_lower", &bounds::paley_lower, py::arg("d"));
    m.def(
        "robin_upper",
        [](std::int64_t N) {
            auto r = bounds::robin_upper(N);
            return py::make_tuple(r.two_term, r.merged);
        },
        py::arg("N"), "(two_term, merged)");
    m.def(
        "paley_lower_sum",
        [](py::object x) {
            static py::object Fraction = py::module_::import("fractions").attr("Fraction");
            py::object fx = Fraction(x);
            Rational q(fx.attr("numerator").cast<long>(), fx.attr("denominator").cast<long>());
            q.canonicalize();
            return bounds::paley_lower_sum(q);
        },
        py::arg("x"));
    m.def(
        "interior_sum_chain",
        [](std::int64_t p, std::int64_t n) {
            auto c = bounds::interior_sum_chain(p, n);
            return py::make_tuple(c.rhs1, c.rhs2, c.rhs3);
        },
        py::arg("p"), py::arg("n"), "(rhs1, rhs2, rhs3)");
    m.def("self_intersection_lower", &bounds::self_intersection_lower, py::arg("p"),
          py::arg("N"), py::arg("variant"),
          py::arg("constants") = arith::BoundConstants::standard());
    m.def("epsilon_of", &bounds::epsilon_of, py::arg("p"));
    m.def("k_threshold", &bounds::k_threshold, py::arg("eps"), py::arg("variant"));
    m.def("model_t", &bounds::model_t, py::arg("p"), py::arg("N"), py::arg("keps"),
          py::arg("constants") = arith::BoundConstants::standard());
    m.def("model_t_deriv", &bounds::model_t_deriv, py::arg("p"), py::arg("N"),
          py::arg("keps"), py::arg("constants") = arith::BoundConstants::standard());
    m.def("model_argmin", &bounds::model_argmin, py::arg("p"), py::arg("keps"),
          py::arg("constants") = arith::BoundConstants::standard());
    m.def("model_argmin_published", &bounds::model_argmin_published, py::arg("p"),
          py::arg("keps"), py::arg("constants") = arith::BoundConstants::standard());
    m.def("asymptotic_floor", &bounds::asymptotic_floor, py::arg("p"),
          py::arg("constants") = arith::BoundConstants::standard(), py::arg("keps") = 0.0);

    // surface
    py::class_<surface::SurfaceData>(m, "SurfaceData")
        .def(py::init<double, double>(), py::arg("c2"), py::arg("ksq"))
        .def_readonly("c2", &surface::SurfaceData::c2)
        .def_readonly("ksq", &surface::SurfaceData::ksq)
        .def_readonly("d2", &surface::SurfaceData::d2);
    py::class_<surface::CurveData>(m, "CurveData")
        .def(py::init([](double csq, double kc, std::int64_t g, double sc, double rho) {
                 return surface::CurveData{csq, kc, g, sc, rho};
             }),
             py::arg("csq"), py::arg("kc"), py::arg("g"), py::arg("sc") = 0.0,
             py::arg("rho") = 0.0)
        .def_readonly("csq", &surface::CurveData::csq)
        .def_readonly("kc", &surface::CurveData::kc)
        .def_readonly("g", &surface::CurveData::g)
        .def_readonly("sc", &surface::CurveData::sc)
        .def_readonly("rho", &surface::CurveData::rho);

    m.def("delta_of", &surface::delta_of, py::arg("curve"));
    m.def("miyaoka_lhs", &surface::miyaoka_lhs, py::arg("alpha"), py::arg("curve"),
          py::arg("surface"));
    m.def("alpha_form", &surface::alpha_form, py::arg("alpha"), py::arg("delta"),
          py::arg("csq"), py::arg("sc"), py::arg("rho"), py::arg("d2"));
    m.def("alpha_form_min", &surface::alpha_form_min, py::arg("delta"), py::arg("csq"),
          py::arg("sc"), py::arg("rho"));
    m.def("proportionality_residual", &surface::proportionality_residual, py::arg("curve"),
          py::arg("delta"));
    m.def("self_intersection_chain_lower", &surface::self_intersection_chain_lower,
          py::arg("delta"), py::arg("sc"), py::arg("rho"), py::arg("d2"));
    m.def("exact_bound_coefficient", &surface::exact_bound_coefficient);
    m.def("nonneg_delta_threshold", &surface::nonneg_delta_threshold, py::arg("d2"));
    m.def("zeta_minus_one",
          [](std::int64_t p) { return to_fraction(surface::zeta_minus_one(p)); },
          py::arg("p"));
    m.def("volume",
          [](std::int64_t p, std::int64_t index) {
              return to_fraction(surface::volume(p, index));
          },
          py::arg("p"), py::arg("index") = 1);
    m.def("sigma0_sum", &surface::sigma0_sum, py::arg("p"));
    m.def("sigma1_sum", &surface::sigma1_sum, py::arg("p"));
    m.def("sigma0_sum_upper", &surface::sigma0_sum_upper, py::arg("p"));
    m.def("sigma1_sum_upper", &surface::sigma1_sum_upper, py::arg("p"));
    m.def("cusp_curve_count_upper", &surface::cusp_curve_count_upper, py::arg("p"));
    m.def(
        "quotient_singularity_bounds",
        [](std::int64_t p) {
            auto q = surface::quotient_singularity_bounds(p);
            py::dict d;
            d["a2_exact"] = q.a2_exact;
            d["a2_lower"] = q.a2_lower;
            d["a3_plus_lower"] = q.a3_plus_lower;
            d["a3_minus_lower"] = q.a3_minus_lower;
            d["contribution_lower"] = q.contribution_lower;
            d["valid_range"] = q.valid_range;
            return d;
        },
        py::arg("p"));
    m.def("chern_negativity_bound", &surface::chern_negativity_bound, py::arg("p"));
    m.def(
        "chern_negativity_terms",
        [](std::int64_t p) {
            auto t = surface::chern_negativity_terms(p);
            return py::make_tuple(t.t1, t.t2, t.t3, t.t4, t.t5);
        },
        py::arg("p"));

    // reports
    m.def(
        "scan_rows",
        [](std::int64_t p, std::int64_t n_max) {
            reports::ScanOptions opt;
            opt.p = p;
            opt.n_max = n_max;
            auto result = reports::run_scan(opt, cache());
            py::list rows;
            for (const auto& r : result.rows) {
                py::dict d;
                d["N"] = r.N;
                d["tn2"] = to_fraction(r.tn2);
                d["sigma_floor"] = to_fraction(r.sigma_floor);
                d["lemma2_statement"] = r.lemma2_statement;
                d["lemma2_proof"] = r.lemma2_proof;
                d["viol_statement"] = r.viol_statement;
                d["viol_proof"] = r.viol_proof;
                rows.append(d);
            }
            return rows;
        },
        py::arg("p"), py::arg("n_max"), "Compact-mode scan of the split-prime family");
    m.def("chern_report", &reports::chern_report, py::arg("p"));

    m.attr("__version__") = "0.1.0";
}
