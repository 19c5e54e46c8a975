#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "layered_cheb/checker.hpp"
#include "layered_cheb/cli.hpp"
#include "layered_cheb/oracle.hpp"
#include "layered_cheb/pattern_text.hpp"
#include "layered_cheb/serialize.hpp"
#include "layered_cheb/series.hpp"

namespace py = pybind11;
using namespace layered_cheb;

namespace {

py::int_ to_py(const BigInt& value) {
    const std::string text = value.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_py(v));
    return out;
}

BigInt from_py(const py::handle& value) {
    if (!PyLong_Check(value.ptr())) throw py::type_error("coefficients must be ints");
    return BigInt(py::str(value).cast<std::string>());
}

IntPolynomial poly_from_py(const py::sequence& coeffs) {
    std::vector<BigInt> out;
    for (const auto& c : coeffs) out.push_back(from_py(c));
    return IntPolynomial(std::move(out));
}

py::list poly_to_py(const IntPolynomial& poly) {
    py::list out;
    for (int i = 0; i <= poly.degree(); ++i) out.append(to_py(poly[static_cast<std::size_t>(i)]));
    return out;
}

// A permutation given as "2,1,4,3", "2143" or a sequence of ints.
Permutation perm_arg(const py::handle& obj) {
    if (py::isinstance<py::str>(obj)) return parse_permutation(obj.cast<std::string>());
    return Permutation(obj.cast<std::vector<int>>());
}

// A pattern set given as "123;2143" or a sequence of permutations.
PatternSet patterns_arg(const py::handle& obj) {
    if (py::isinstance<py::str>(obj)) return parse_pattern_set(obj.cast<std::string>());
    std::vector<Permutation> out;
    for (const auto& p : obj.cast<py::sequence>()) out.push_back(perm_arg(p));
    return PatternSet(std::move(out));
}

std::vector<int> perm_to_py(const Permutation& p) { return {p.begin(), p.end()}; }

py::object report_to_py(const VerificationReport& r) {
    return py::module_::import("json").attr("loads")(to_json(r).dump());
}

OracleLimits limits_arg(int max_length) { return OracleLimits{max_length}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Counts of permutations avoiding (1,2,3) and a layered pattern";

    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    m.attr("DEFAULT_MAX_LENGTH") = kDefaultMaxLength;
    m.attr("SCHEMA_VERSION") = kSchemaVersion;

    m.def("parse_permutation", [](const std::string& text) { return perm_to_py(parse_permutation(text)); });
    m.def("parse_pattern_set", [](const std::string& text) {
        std::vector<std::vector<int>> out;
        const auto set = parse_pattern_set(text);
        for (const auto& p : set.patterns()) out.push_back(perm_to_py(p));
        return out;
    });

    m.def("contains", [](const py::object& perm, const py::object& pattern) {
        return contains(perm_arg(perm), perm_arg(pattern));
    }, py::arg("perm"), py::arg("pattern"));
    m.def("avoids_all", [](const py::object& perm, const py::object& patterns) {
        return avoids_all(perm_arg(perm), patterns_arg(patterns));
    }, py::arg("perm"), py::arg("patterns"));
    m.def("layered", [](const std::vector<int>& parts) { return perm_to_py(layered(LayeredShape(parts))); },
          py::arg("parts"));
    m.def("layer_decomposition", [](const py::object& perm) -> std::optional<std::vector<int>> {
        const auto shape = layer_decomposition(perm_arg(perm));
        if (!shape) return std::nullopt;
        return std::vector<int>(shape->parts().begin(), shape->parts().end());
    }, py::arg("perm"));
    m.def("layered_pair", [](int d, int k) {
        std::vector<std::vector<int>> out;
        const auto set = layered_pair(d, k);
        for (const auto& p : set.patterns()) out.push_back(perm_to_py(p));
        return out;
    }, py::arg("d"), py::arg("k"));

    m.def("count_avoiders", [](int n, const py::object& patterns, int max_length) {
        const auto set = patterns_arg(patterns);
        BigInt value;
        {
            py::gil_scoped_release release;
            value = count_avoiders(n, set, limits_arg(max_length));
        }
        return to_py(value);
    }, py::arg("n"), py::arg("patterns"), py::arg("max_length") = kDefaultMaxLength);
    m.def("count_series", [](int n_max, const py::object& patterns, int max_length) {
        const auto set = patterns_arg(patterns);
        IntSeries values;
        {
            py::gil_scoped_release release;
            values = count_series(n_max, set, limits_arg(max_length));
        }
        return to_py(values);
    }, py::arg("n_max"), py::arg("patterns"), py::arg("max_length") = kDefaultMaxLength);
    m.def("catalan", [](int n) { return to_py(catalan(n)); }, py::arg("n"));

    m.def("cheb_poly", [](int k) { return poly_to_py(cheb_poly(k)); }, py::arg("k"),
          "Coefficients of P_k in increasing powers of x.");
    m.def("r_k_gf", [](int k) {
        const auto gf = r_k_gf(k);
        return py::make_tuple(poly_to_py(gf.numerator()), poly_to_py(gf.denominator()));
    }, py::arg("k"), "(numerator, denominator) of R_k.");
    m.def("expand", [](const py::sequence& num, const py::sequence& den, int n_max) {
        return to_py(expand(RationalGF(poly_from_py(num), poly_from_py(den)), n_max));
    }, py::arg("numerator"), py::arg("denominator"), py::arg("n_max"));
    m.def("catalan_identity_check", &catalan_identity_check, py::arg("k"), py::arg("l"));
    m.def("chebyshev_u_via_poly", &chebyshev_u_via_poly, py::arg("k"), py::arg("theta"));
    m.def("predicted_series", [](const py::object& tau, int n_max, int max_length) {
        const auto p = predicted_series(perm_arg(tau), n_max, limits_arg(max_length));
        py::dict out;
        out["values"] = to_py(p.values);
        out["branch"] = to_string(p.branch);
        out["k"] = p.k;
        out["layers"] = p.layers;
        out["degree_bound_holds"] = p.degree_bound_holds ? py::cast(*p.degree_bound_holds) : py::none();
        return out;
    }, py::arg("tau"), py::arg("n_max"), py::arg("max_length") = kDefaultMaxLength);

    py::class_<Checker>(m, "Checker", "Verification suites sharing one prefix-count cache.")
        .def(py::init([](int max_length) { return Checker(limits_arg(max_length)); }),
             py::arg("max_length") = kDefaultMaxLength)
        .def("check_symmetry", [](Checker& c, int n_max, int k_max) {
            return report_to_py(c.check_symmetry(n_max, k_max));
        }, py::arg("n_max"), py::arg("k_max"))
        .def("check_lemma22", [](Checker& c, int n_max, int d, int k) {
            return report_to_py(c.check_lemma22(n_max, d, k));
        }, py::arg("n_max"), py::arg("d"), py::arg("k"))
        .def("check_recursion", [](Checker& c, int n_max, int d, int k) {
            return report_to_py(c.check_recursion(n_max, d, k));
        }, py::arg("n_max"), py::arg("d"), py::arg("k"))
        .def("check_eq3", [](Checker& c, int n_max, int d, int k) {
            return report_to_py(c.check_eq3(n_max, d, k));
        }, py::arg("n_max"), py::arg("d"), py::arg("k"))
        .def("check_eq4", [](Checker& c, int n_max, int d, int k) {
            return report_to_py(c.check_eq4(n_max, d, k));
        }, py::arg("n_max"), py::arg("d"), py::arg("k"))
        .def("check_main", [](Checker& c, int n_max, const py::object& tau) {
            return report_to_py(c.check_main(n_max, perm_arg(tau)));
        }, py::arg("n_max"), py::arg("tau"))
        .def("check_theorem11_crosscheck", [](Checker& c, int n_max, int k) {
            return report_to_py(c.check_theorem11_crosscheck(n_max, k));
        }, py::arg("n_max"), py::arg("k"));

    m.def("run_cli", [](const std::vector<std::string>& args, const std::string& env_max_n) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err, env_max_n);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), py::arg("env_max_n") = "",
       "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
