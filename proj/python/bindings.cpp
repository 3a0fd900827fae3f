// Python bindings for the main operations: exact sequences, the ln2/pi
// constant ring, verified enclosures, the identity registry, and the
// verification engines. Rationals cross the boundary as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hf/report.hpp"
#include "hf/verify.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

template <>
struct type_caster<hf::Rational> {
public:
    PYBIND11_TYPE_CASTER(hf::Rational, const_name("Fraction"));

    bool load(handle src, bool) {
        if (src.is_none()) return false;
        if (py::isinstance<py::int_>(src)) {
            value = hf::Rational(hf::Integer(py::str(src).cast<std::string>(), 10));
            return true;
        }
        if (py::isinstance<py::float_>(src)) return false;  // no silent floats
        if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
            std::string n = py::str(src.attr("numerator")).cast<std::string>();
            std::string d = py::str(src.attr("denominator")).cast<std::string>();
            value = hf::Rational(hf::Integer(n, 10), hf::Integer(d, 10));
            return true;
        }
        if (py::isinstance<py::str>(src)) {
            value = hf::Rational::from_string(src.cast<std::string>());
            return true;
        }
        return false;
    }

    static handle cast(const hf::Rational& q, return_value_policy, handle) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(py::str(q.to_string())).release();
    }
};

}  // namespace detail
}  // namespace pybind11

namespace {

using hf::Binding;
using hf::Rational;

Binding make_binding(long n, const std::optional<Rational>& b,
                     const std::optional<Rational>& c, const std::optional<long>& m) {
    Binding t;
    t.n = n;
    t.b = b;
    t.c = c;
    t.m = m;
    return t;
}

py::dict instance_dict(const hf::InstanceResult& ins) {
    py::dict d;
    d["n"] = ins.binding.n;
    d["b"] = ins.binding.b ? py::cast(*ins.binding.b) : py::object(py::none());
    d["c"] = ins.binding.c ? py::cast(*ins.binding.c) : py::object(py::none());
    d["m"] = ins.binding.m ? py::cast(*ins.binding.m) : py::object(py::none());
    d["status"] = hf::status_name(ins.status);
    d["lhs"] = ins.lhs_text;
    d["rhs"] = ins.rhs_text;
    if (ins.lhs_width) d["lhs_width"] = py::cast(*ins.lhs_width);
    if (ins.rhs_width) d["rhs_width"] = py::cast(*ins.rhs_width);
    d["note"] = ins.note;
    return d;
}

py::dict report_dict(const hf::VerificationReport& rep) {
    py::dict d;
    d["id"] = rep.id;
    d["backend"] = rep.backend;
    d["ok"] = rep.ok();
    d["passed"] = rep.passed();
    d["failed"] = rep.failed();
    d["skipped"] = rep.count(hf::Status::SkippedPole);
    d["unsupported"] = rep.count(hf::Status::Unsupported);
    d["inconclusive"] = rep.count(hf::Status::Inconclusive);
    py::list items;
    for (const auto& ins : rep.instances) items.append(instance_dict(ins));
    d["instances"] = items;
    return d;
}

hf::GridSpec make_grid(long n_min, long n_max, const std::vector<Rational>& b_values,
                       const std::vector<Rational>& c_values, long m_max) {
    hf::GridSpec g;
    g.n_min = n_min;
    g.n_max = n_max;
    g.b_values = b_values;
    g.c_values = c_values;
    for (long m = 1; m <= m_max; ++m) g.m_values.push_back(m);
    return g;
}

std::pair<Rational, Rational> interval_pair(const hf::Interval& i) {
    return {i.lo(), i.hi()};
}

}  // namespace

PYBIND11_MODULE(hfverify, m) {
    m.doc() = "exact and interval verification of harmonic-number binomial identities";

    py::register_exception<hf::PoleError>(m, "PoleError");
    py::register_exception<hf::UnsupportedError>(m, "UnsupportedShapeError");
    py::register_exception<hf::RingOverflowError>(m, "RingOverflowError");
    py::register_exception<hf::UnknownIdentityError>(m, "UnknownIdentityError");
    py::register_exception<hf::PrecisionError>(m, "PrecisionError");

    // exact sequences
    m.def("harmonic", &hf::harmonic, py::arg("n"));
    m.def("gen_harmonic", &hf::gen_harmonic, py::arg("n"), py::arg("r"));
    m.def("odd_harmonic", &hf::odd_harmonic, py::arg("n"));
    m.def("odd_gen_harmonic2", &hf::odd_gen_harmonic2, py::arg("n"));
    m.def("bernoulli", &hf::bernoulli, py::arg("n"));
    m.def("binomial", &hf::binomial_int, py::arg("n"), py::arg("k"));
    m.def("gen_binomial_lower", &hf::gen_binomial_rational_lower, py::arg("r"), py::arg("s"),
          "C(r,s) by falling factorial for integer s >= 0");

    // constant-extension ring
    py::class_<hf::ConstExpr>(m, "ConstExpr")
        .def(py::init([](const Rational& q) { return hf::ConstExpr(q); }), py::arg("value"))
        .def_static("ln2", &hf::ConstExpr::ln2_sym)
        .def_static("pi", &hf::ConstExpr::pi_sym)
        .def_static("monomial", &hf::ConstExpr::monomial, py::arg("ln2_pow"),
                    py::arg("pi_pow"), py::arg("coeff"))
        .def("is_zero", &hf::ConstExpr::is_zero)
        .def("is_rational", &hf::ConstExpr::is_rational)
        .def("as_fraction", &hf::ConstExpr::as_rational)
        .def("__add__", [](const hf::ConstExpr& a, const hf::ConstExpr& b) { return a + b; })
        .def("__sub__", [](const hf::ConstExpr& a, const hf::ConstExpr& b) { return a - b; })
        .def("__mul__", [](const hf::ConstExpr& a, const hf::ConstExpr& b) { return a * b; })
        .def("__truediv__",
             [](const hf::ConstExpr& a, const hf::ConstExpr& b) { return a / b; })
        .def("__neg__", [](const hf::ConstExpr& a) { return -a; })
        .def("__eq__", [](const hf::ConstExpr& a, const hf::ConstExpr& b) { return a == b; })
        .def("scale", [](const hf::ConstExpr& a, const Rational& q) { return a * q; })
        .def("enclosure",
             [](const hf::ConstExpr& e, long bits) {
                 return interval_pair(e.eval_interval(hf::pow2(-bits)));
             },
             py::arg("bits") = 64, "guaranteed (lo, hi) enclosure of the real value")
        .def("__str__", &hf::ConstExpr::to_string)
        .def("__repr__",
             [](const hf::ConstExpr& e) { return "ConstExpr(" + e.to_string() + ")"; });

    // half-integer exact values
    m.def("harmonic_half",
          [](long n, const std::string& offset) {
              hf::HalfArg a{n, hf::HalfArg::MinusHalf};
              if (offset == "+1/2") a.offset = hf::HalfArg::PlusHalf;
              else if (offset == "-3/2") a.offset = hf::HalfArg::MinusThreeHalves;
              else if (offset != "-1/2")
                  throw hf::DomainError("offset must be one of -1/2, +1/2, -3/2");
              return hf::harmonic_half(a);
          },
          py::arg("n"), py::arg("offset") = "-1/2");
    m.def("harmonic2_half", &hf::harmonic2_half, py::arg("n"));
    m.def("gen_binomial_exact", &hf::gen_binomial_exact, py::arg("r"), py::arg("s"));
    m.def("gen_binomial_exact_rule",
          [](const Rational& r, const Rational& s) {
              return std::string(hf::gen_binomial_exact_traced(r, s).rule);
          },
          py::arg("r"), py::arg("s"), "which dispatcher rule evaluates C(r,s)");

    // verified enclosures; every function returns an exact (lo, hi) pair
    auto prec = [](long bits) { return hf::Precision::bits(bits); };
    m.def("ln2_enclosure",
          [prec](long bits) { return interval_pair(hf::ln2_enclosure(prec(bits))); },
          py::arg("bits") = 64);
    m.def("pi_enclosure",
          [prec](long bits) { return interval_pair(hf::pi_enclosure(prec(bits))); },
          py::arg("bits") = 64);
    m.def("lgamma_enclosure",
          [prec](const Rational& x, long bits) {
              return interval_pair(hf::lgamma_enclosure(x, prec(bits)));
          },
          py::arg("x"), py::arg("bits") = 64);
    m.def("digamma_enclosure",
          [prec](const Rational& x, long bits) {
              return interval_pair(hf::digamma_enclosure(x, prec(bits)));
          },
          py::arg("x"), py::arg("bits") = 64);
    m.def("polygamma_enclosure",
          [prec](int j, const Rational& x, long bits) {
              return interval_pair(hf::polygamma_enclosure(j, x, prec(bits)));
          },
          py::arg("j"), py::arg("x"), py::arg("bits") = 64);
    m.def("harmonic_enclosure",
          [prec](const Rational& x, long bits) {
              return interval_pair(hf::harmonic_enclosure(x, prec(bits)));
          },
          py::arg("x"), py::arg("bits") = 64);
    m.def("harmonic2_enclosure",
          [prec](const Rational& x, long bits) {
              return interval_pair(hf::harmonic2_enclosure(x, prec(bits)));
          },
          py::arg("x"), py::arg("bits") = 64);
    m.def("gen_binomial_enclosure",
          [prec](const Rational& r, const Rational& s, long bits) {
              return interval_pair(hf::gen_binomial_enclosure(r, s, prec(bits)));
          },
          py::arg("r"), py::arg("s"), py::arg("bits") = 64);

    // registry
    m.def("list_identities", [] {
        py::list out;
        for (const auto& d : hf::list_identities()) {
            py::dict e;
            e["id"] = d.id;
            e["statement"] = d.statement;
            e["params"] = d.params.to_string();
            py::list backends;
            for (hf::Backend b : {hf::Backend::ExactRational, hf::Backend::ExactRing,
                                  hf::Backend::Interval})
                if (hf::has_backend(d.backends, b)) backends.append(hf::backend_name(b));
            e["backends"] = backends;
            py::list rels;
            for (const auto& r : d.relations) {
                py::dict rd;
                rd["kind"] = hf::relation_kind_name(r.kind);
                rd["target"] = r.target;
                if (!r.note.empty()) rd["note"] = r.note;
                rels.append(rd);
            }
            e["relations"] = rels;
            if (!d.source.empty()) e["source"] = d.source;
            out.append(e);
        }
        return out;
    });

    m.def("evaluate_lhs",
          [](const std::string& id, long n, const std::optional<Rational>& b,
             const std::optional<Rational>& c, const std::optional<long>& mm,
             const std::string& backend, long bits) -> py::object {
              const auto& d = hf::get_identity(id);
              Binding t = make_binding(n, b, c, mm);
              if (backend == "rational") {
                  hf::RatCtx cx;
                  return py::cast(hf::evaluate_lhs(d, cx, t));
              }
              if (backend == "constring") {
                  hf::RingCtx cx;
                  return py::cast(hf::evaluate_lhs(d, cx, t));
              }
              hf::IvalCtx cx{bits};
              return py::cast(interval_pair(hf::evaluate_lhs(d, cx, t)));
          },
          py::arg("id"), py::arg("n"), py::arg("b") = py::none(), py::arg("c") = py::none(),
          py::arg("m") = py::none(), py::arg("backend") = "rational", py::arg("bits") = 64);
    m.def("evaluate_rhs",
          [](const std::string& id, long n, const std::optional<Rational>& b,
             const std::optional<Rational>& c, const std::optional<long>& mm,
             const std::string& backend, long bits) -> py::object {
              const auto& d = hf::get_identity(id);
              Binding t = make_binding(n, b, c, mm);
              if (backend == "rational") {
                  hf::RatCtx cx;
                  return py::cast(hf::evaluate_rhs(d, cx, t));
              }
              if (backend == "constring") {
                  hf::RingCtx cx;
                  return py::cast(hf::evaluate_rhs(d, cx, t));
              }
              hf::IvalCtx cx{bits};
              return py::cast(interval_pair(hf::evaluate_rhs(d, cx, t)));
          },
          py::arg("id"), py::arg("n"), py::arg("b") = py::none(), py::arg("c") = py::none(),
          py::arg("m") = py::none(), py::arg("backend") = "rational", py::arg("bits") = 64);

    // verification engines
    m.def("verify_exact",
          [](const std::string& id, long n_max, const std::vector<Rational>& b_values,
             const std::vector<Rational>& c_values, long m_max, bool force_ring) {
              return report_dict(hf::verify_exact(
                  id, make_grid(0, n_max, b_values, c_values, m_max),
                  force_ring ? hf::ExactMode::ForceRing : hf::ExactMode::Auto));
          },
          py::arg("id"), py::arg("n_max") = 10,
          py::arg("b_values") = std::vector<Rational>{Rational(1), Rational(2), Rational(3)},
          py::arg("c_values") = std::vector<Rational>{Rational(1), Rational(2)},
          py::arg("m_max") = 3, py::arg("force_ring") = false);
    m.def("verify_interval",
          [](const std::string& id, long n, const std::optional<Rational>& b,
             const std::optional<Rational>& c, const std::optional<long>& mm, long bits) {
              return report_dict(hf::verify_interval(id, make_binding(n, b, c, mm),
                                                     hf::Precision::bits(bits)));
          },
          py::arg("id"), py::arg("n"), py::arg("b") = py::none(), py::arg("c") = py::none(),
          py::arg("m") = py::none(), py::arg("bits") = 64);
    m.def("binomial_transform",
          [](const std::vector<Rational>& a, long n) { return hf::binomial_transform(a, n); },
          py::arg("a"), py::arg("n"));
    m.def("transform_crosscheck",
          [](const std::string& id_a, const std::string& id_b, long n_max,
             const std::vector<Rational>& b_values, const std::vector<Rational>& c_values) {
              return report_dict(hf::transform_crosscheck(
                  id_a, id_b, make_grid(1, n_max, b_values, c_values, 1)));
          },
          py::arg("id_a"), py::arg("id_b"), py::arg("n_max") = 20,
          py::arg("b_values") = std::vector<Rational>{Rational(1), Rational(2)},
          py::arg("c_values") = std::vector<Rational>{Rational(1)});
    m.def("derivative_consistency",
          [](const std::string& base, const std::string& derived, long n,
             const std::optional<Rational>& b, const std::optional<Rational>& c,
             const std::vector<Rational>& hs, long bits) {
              return report_dict(hf::derivative_consistency(base, derived,
                                                            make_binding(n, b, c, {}), hs,
                                                            hf::Precision::bits(bits)));
          },
          py::arg("base"), py::arg("derived"), py::arg("n"), py::arg("b") = py::none(),
          py::arg("c") = py::none(),
          py::arg("h_values") = std::vector<Rational>{Rational(1, 8), Rational(1, 16),
                                                      Rational(1, 32)},
          py::arg("bits") = 96);
    m.def("mth_power_sum", &hf::mth_power_sum_closed_form, py::arg("n"), py::arg("b"),
          py::arg("m"));
}
