#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <string>

#include "pzeta/arith.hpp"
#include "pzeta/commands.hpp"
#include "pzeta/cyclotomic.hpp"
#include "pzeta/dirichlet.hpp"
#include "pzeta/errors.hpp"
#include "pzeta/nested_radical.hpp"
#include "pzeta/report.hpp"
#include "pzeta/zeta.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

// Exact values cross the boundary as fractions.Fraction / int via their
// decimal strings.
py::object to_fraction(const pzeta::Rational& q) {
    return py::module_::import("fractions").attr("Fraction")(q.get_str());
}

py::object to_pyint(const pzeta::Integer& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

pzeta::Rational from_python(const py::handle& value) {
    return pzeta::Rational(py::str(value).cast<std::string>());
}

pzeta::DirichletSeries series_from_list(const py::list& values) {
    std::vector<pzeta::Rational> coeffs;
    coeffs.reserve(values.size());
    for (const auto& v : values) {
        pzeta::Rational q = from_python(v);
        q.canonicalize();
        coeffs.push_back(std::move(q));
    }
    return pzeta::DirichletSeries(std::move(coeffs));
}

pzeta::PrimeTable table_for(std::size_t n) {
    return pzeta::PrimeTable(static_cast<std::uint32_t>(std::max<std::size_t>(n, 2)));
}

py::object report_to_dict(const pzeta::ClaimReport& report) {
    return py::module_::import("json").attr("loads")(pzeta::to_structured(report));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Dirichlet-series algebra, zeta/prime-zeta evaluation, nested radicals "
              "and cyclotomic polynomials";

    static py::exception<pzeta::RadicandError> radicand_error(m, "RadicandError",
                                                             PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const pzeta::RadicandError& e) {
            py::object err = py::reinterpret_borrow<py::object>(radicand_error)(e.what());
            err.attr("level") = e.level();
            PyErr_SetObject(radicand_error.ptr(), err.ptr());
        } catch (const pzeta::PrecisionError& e) {
            PyErr_SetString(PyExc_ArithmeticError, e.what());
        } catch (const pzeta::NonInvertibleError& e) {
            PyErr_SetString(PyExc_ZeroDivisionError, e.what());
        } catch (const pzeta::DomainError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const pzeta::UsageError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    // arith_core
    m.def("primes_up_to", [](std::uint32_t limit) {
        const auto table = pzeta::sieve(limit);
        return std::vector<std::uint32_t>(table.primes().begin(), table.primes().end());
    }, "limit"_a, "All primes <= limit.");
    m.def("factorize", [](std::uint32_t n) {
        const auto f = pzeta::factorize(n, table_for(n));
        std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
        for (const auto& [p, e] : f.factors()) out.emplace_back(p, e);
        return out;
    }, "n"_a, "Prime factorization as [(p, e), ...].");
    m.def("mobius", [](std::uint32_t n) {
        return pzeta::mobius(pzeta::factorize(n, table_for(n)));
    }, "n"_a);
    m.def("bernoulli", [](unsigned k) { return to_fraction(pzeta::bernoulli(k)); }, "m"_a,
          "Exact Bernoulli number B_m as a Fraction.");

    // dirichlet
    py::class_<pzeta::DirichletSeries>(m, "DirichletSeries")
        .def(py::init(&series_from_list), "coefficients"_a,
             "Build from [a_1, a_2, ...] (ints, Fractions or 'p/q' strings).")
        .def_property_readonly("truncation", &pzeta::DirichletSeries::truncation)
        .def("__len__", &pzeta::DirichletSeries::truncation)
        .def("__getitem__", [](const pzeta::DirichletSeries& s, std::size_t n) {
            return to_fraction(s.at(n));
        }, "n"_a, "Coefficient a_n (1-based).")
        .def("coefficients", [](const pzeta::DirichletSeries& s) {
            py::list out;
            for (const auto& q : s.coefficients()) out.append(to_fraction(q));
            return out;
        })
        .def(py::self == py::self);

    m.def("zeta_series", &pzeta::zeta_series, "truncation"_a);
    m.def("prime_zeta_series", [](std::size_t n) {
        return pzeta::prime_zeta_series(n, table_for(n));
    }, "truncation"_a);
    m.def("dilate", &pzeta::dilate, "series"_a, "k"_a, "truncation"_a);
    m.def("convolve", &pzeta::convolve, "a"_a, "b"_a);
    m.def("invert", &pzeta::invert, "a"_a);
    m.def("first_mismatch", [](const pzeta::DirichletSeries& a,
                               const pzeta::DirichletSeries& b) -> py::object {
        const auto mm = pzeta::first_mismatch(a, b);
        if (!mm) return py::none();
        return py::make_tuple(mm->index, to_fraction(mm->lhs), to_fraction(mm->rhs));
    }, "a"_a, "b"_a, "(index, a_n, b_n) for the smallest differing index, or None.");
    m.def("prime_zeta_claim_series", [](std::size_t n) {
        auto c = pzeta::prime_zeta_claim_series(n);
        return py::make_tuple(std::move(c.lhs), std::move(c.rhs));
    }, "truncation"_a, "(2/zeta, 2 - 2P + P*P - P(2s)) as Dirichlet series.");

    // zeta_eval
    py::class_<pzeta::EvalResult>(m, "EvalResult")
        .def_readonly("value", &pzeta::EvalResult::value)
        .def_readonly("error_bound", &pzeta::EvalResult::error_bound)
        .def("__repr__", [](const pzeta::EvalResult& r) {
            return "EvalResult(value=" + pzeta::format_value(r.value) +
                   ", error_bound=" + pzeta::format_value(r.error_bound) + ")";
        });
    m.def("zeta_real", &pzeta::zeta_real, "s"_a, "tol"_a = pzeta::kMinTolerance);
    m.def("euler_even_zeta", &pzeta::euler_even_zeta, "k"_a);
    m.def("prime_zeta", &pzeta::prime_zeta, "s"_a, "tol"_a = 1e-12);
    m.def("prime_zeta_direct", &pzeta::prime_zeta_direct, "s"_a, "prime_limit"_a);
    m.def("claim_lhs", &pzeta::claim_lhs, "s"_a, "tol"_a = 1e-12);
    m.def("claim_rhs", &pzeta::claim_rhs, "s"_a, "tol"_a = 1e-12);
    m.def("singularity_probe", [](const std::vector<double>& eps) {
        py::list out;
        for (const auto& row : pzeta::singularity_probe(eps)) {
            py::dict d;
            d["eps"] = row.eps;
            d["lhs"] = row.lhs ? py::cast(*row.lhs) : py::none();
            d["rhs"] = row.rhs ? py::cast(*row.rhs) : py::none();
            d["error"] = row.error;
            out.append(d);
        }
        return out;
    }, "epsilons"_a);

    // nested_radical
    py::enum_<pzeta::TailMode>(m, "TailMode")
        .value("ZERO_TAIL", pzeta::TailMode::kZero)
        .value("ONE_TAIL", pzeta::TailMode::kOne);
    py::class_<pzeta::RadicalTrace>(m, "RadicalTrace")
        .def_readonly("s", &pzeta::RadicalTrace::s)
        .def_readonly("depth", &pzeta::RadicalTrace::depth)
        .def_readonly("tail_mode", &pzeta::RadicalTrace::tail_mode)
        .def_readonly("levels", &pzeta::RadicalTrace::levels)
        .def_property_readonly("value", &pzeta::RadicalTrace::value);
    m.def("eval_nested", &pzeta::eval_nested, "s"_a, "depth"_a,
          "tail_mode"_a = pzeta::TailMode::kOne);
    m.def("convergence_report", [](double s, int max_depth) {
        py::list out;
        for (const auto& row : pzeta::convergence_report(s, max_depth)) {
            out.append(py::make_tuple(row.depth,
                                      row.zero_gap ? py::cast(*row.zero_gap) : py::none(),
                                      row.one_gap));
        }
        return out;
    }, "s"_a, "max_depth"_a, "[(depth, zero_tail_gap or None, one_tail_gap), ...]");
    m.def("tail_fixed_point", [](double x0) { return pzeta::tail_fixed_point(x0).value; },
          "x0"_a = 0.5);
    m.def("claim4_check", [](double s, int depth) {
        const auto c = pzeta::claim4_check(s, depth);
        py::dict d;
        d["radical_value"] = c.radical_value;
        d["radical_error_bound"] = c.radical_error_bound;
        d["prime_zeta"] = c.prime_zeta;
        d["gap"] = c.gap;
        return d;
    }, "s"_a, "depth"_a);

    // cyclotomic
    m.def("cyclotomic", [](std::uint32_t n) {
        const auto phi = pzeta::cyclotomic(n);
        py::list out;
        for (const auto& c : phi.coefficients()) out.append(to_pyint(c));
        return out;
    }, "n"_a, "Coefficients of Phi_n, lowest degree first.");
    m.def("cyclotomic_height", [](std::uint32_t n) { return to_pyint(pzeta::height(n)); },
          "n"_a);

    // cli
    m.def("run_check", [](const std::string& claim, std::optional<std::string> mode, double s,
                          std::optional<std::size_t> max_n, double tol, int depth,
                          std::vector<double> eps) {
        pzeta::CheckOptions opt;
        const auto id = pzeta::parse_claim_argument(claim);
        if (!id) throw pzeta::UsageError("unknown claim '" + claim + "'");
        opt.claim = *id;
        if (mode) {
            const auto md = pzeta::parse_mode_argument(*mode);
            if (!md) throw pzeta::UsageError("unknown mode '" + *mode + "'");
            opt.mode = *md;
        }
        opt.s = s;
        opt.max_n = max_n;
        opt.tol = tol;
        opt.depth = depth;
        opt.eps = std::move(eps);
        return report_to_dict(pzeta::run_check(opt));
    }, "claim"_a, "mode"_a = py::none(), "s"_a = 2.0, "max_n"_a = py::none(), "tol"_a = 1e-12,
       "depth"_a = 20, "eps"_a = std::vector<double>{},
       "Run a claim check and return the structured report as a dict.");

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
