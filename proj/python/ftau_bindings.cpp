#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ftau/characters.hpp"
#include "ftau/golden_int.hpp"
#include "ftau/pl_homeo.hpp"
#include "ftau/sigma.hpp"
#include "ftau/subgroups.hpp"
#include "ftau/words.hpp"

namespace py = pybind11;
using namespace ftau;

namespace {

// Python ints and Fractions cross the boundary as decimal strings.
py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt to_big(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

Rational to_rational(const py::object& v) { return parse_rational(py::str(v).cast<std::string>()); }

py::object to_fraction(const Rational& r) {
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(numerator(r)), to_py(denominator(r)));
}

Character character(const py::object& a, const py::object& b) { return {to_rational(a), to_rational(b)}; }

CharacterClass class_from(const py::object& a, const py::object& b) { return class_of(character(a, b)); }

py::tuple hnn_tuple(const HnnForm& h) { return py::make_tuple(h.a, format_word(h.core), h.b); }

HnnForm hnn_from(std::uint64_t a, const std::string& core, std::uint64_t b) { return {a, parse_word(core), b}; }

}  // namespace

PYBIND11_MODULE(_ftau, m) {
  m.doc() = "Exact arithmetic in the golden mean Thompson group F_t";

  auto user_error = py::register_exception<UserError>(m, "UserError", PyExc_ValueError);
  py::register_exception<StepLimitExceeded>(m, "StepLimitExceeded", PyExc_RuntimeError);
  (void)user_error;

  py::class_<GoldenInt>(m, "GoldenInt")
      .def(py::init([](const py::int_& a, const py::int_& b) { return GoldenInt(to_big(a), to_big(b)); }),
           py::arg("a") = 0, py::arg("b") = 0)
      .def_static("parse", &GoldenInt::parse)
      .def_static("tau_pow", &GoldenInt::tau_pow)
      .def_property_readonly("a", [](const GoldenInt& x) { return to_py(x.a()); })
      .def_property_readonly("b", [](const GoldenInt& x) { return to_py(x.b()); })
      .def("sign", &GoldenInt::sign)
      .def("approx", &GoldenInt::approx, py::arg("digits") = 30)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__hash__", [](const GoldenInt& x) { return py::hash(py::make_tuple(to_py(x.a()), to_py(x.b()))); })
      .def("__str__", &GoldenInt::format)
      .def("__repr__", [](const GoldenInt& x) { return "GoldenInt('" + x.format() + "')"; });

  py::class_<PLHomeo>(m, "PLHomeo")
      .def(py::init([](const std::vector<std::tuple<GoldenInt, GoldenInt, std::int64_t>>& pieces) {
             std::vector<Piece> ps;
             for (const auto& [left, value, slope] : pieces) ps.push_back(Piece{left, value, slope});
             return PLHomeo::from_pieces(std::move(ps));
           }),
           py::arg("pieces"))
      .def_static("identity", [] { return PLHomeo::identity(); })
      .def_property_readonly("pieces",
                             [](const PLHomeo& f) {
                               py::list out;
                               for (const auto& p : f.pieces()) out.append(py::make_tuple(p.left, p.value, p.slope_exponent));
                               return out;
                             })
      .def("__call__", &PLHomeo::operator())
      .def("inverse", &PLHomeo::inverse)
      .def("is_identity", &PLHomeo::is_identity)
      .def("slope_exponent_at_zero", &PLHomeo::slope_exponent_at_zero)
      .def("slope_exponent_at_one", &PLHomeo::slope_exponent_at_one)
      .def("support_bounds", &PLHomeo::support_bounds)
      .def(py::self == py::self)
      .def("__matmul__", [](const PLHomeo& f, const PLHomeo& g) { return compose(f, g); })
      .def("__repr__", [](const PLHomeo& f) { return "<PLHomeo with " + std::to_string(f.pieces().size()) + " pieces>"; });

  m.def("compose", &compose, "x -> g(f(x))", py::arg("f"), py::arg("g"));
  m.def("invert", &invert);
  m.def("nu", &nu);
  m.def("generator_x", &generator_x);
  m.def("generator_y", &generator_y);
  m.def("sample_graph", &sample_graph, py::arg("f"), py::arg("depth") = 2);

  // Words are passed as text in the grammar `x0 y1 x2^-2`.
  m.def("format_word", [](const std::string& w) { return format_word(parse_word(w)); });
  m.def("eval_word", [](const std::string& w) { return eval_word(parse_word(w)); });
  m.def("free_reduce", [](const std::string& w) { return format_word(free_reduce(parse_word(w))); });
  m.def("shift", [](const std::string& w, std::int64_t k) { return format_word(shift(parse_word(w), k)); });
  m.def("relations_up_to", [](std::uint32_t n) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [l, r] : relations_up_to(n)) out.emplace_back(format_word(l), format_word(r));
    return out;
  });
  m.def(
      "normalize",
      [](const std::string& w, std::uint64_t limit) { return format_word(normalize(parse_word(w), limit)); },
      py::arg("word"), py::arg("step_limit") = kDefaultStepLimit);
  m.def("is_normal_form", [](const std::string& w) { return is_normal_form(parse_word(w)); });
  m.def("abelianize", [](const std::string& w) {
    const AbelElt e = abelianize(parse_word(w));
    return py::make_tuple(e.u, e.v, e.z ? 1 : 0);
  });
  m.def("lambda_of", [](const std::string& w) { return lambda_of(parse_word(w)); });
  m.def("rho_of", [](const std::string& w) { return rho_of(parse_word(w)); });
  m.def("coset_parity", [](const std::string& w) { return coset_parity(parse_word(w)); });

  // Characters take ints, Fractions or "p/q" strings for (a, b).
  m.def("eval_character", [](const py::object& a, const py::object& b, const std::string& w) {
    return to_fraction(eval_character(character(a, b), parse_word(w)));
  });
  m.def("class_of", [](const py::object& a, const py::object& b) {
    const CharacterClass c = class_from(a, b);
    return py::make_tuple(to_py(c.a), to_py(c.b));
  });
  m.def("lift_from_K", [](const py::object& a, const py::object& b) {
    const Character chi = lift_from_K(CharacterOnK{to_rational(a), to_rational(b)});
    return py::make_tuple(to_fraction(chi.a), to_fraction(chi.b));
  });
  m.def("in_sqrt_commutator", [](const std::string& w) { return in_sqrt_commutator(parse_word(w)); });
  m.def(
      "sigma_membership",
      [](const py::object& a, const py::object& b, std::uint32_t n, bool on_k) {
        const CharacterClass c = class_from(a, b);
        return on_k ? sigma_membership_K(c, n) : sigma_membership(c, n);
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("on_K") = false);
  m.def("kernel_type", [](const py::object& a, const py::object& b) { return to_string(kernel_coabelian_type(character(a, b))); });
  m.def("kernel_witness", [](const py::object& a, const py::object& b) { return format_word(kernel_witness(character(a, b))); });

  m.def("hnn_rewrite", [](const std::string& w) { return hnn_tuple(hnn_rewrite(parse_word(w))); });
  m.def(
      "hnn_reduce",
      [](std::uint64_t a, const std::string& core, std::uint64_t b, std::uint64_t limit) {
        return hnn_tuple(hnn_reduce(hnn_from(a, core, b), limit));
      },
      py::arg("a"), py::arg("core"), py::arg("b"), py::arg("step_limit") = kDefaultStepLimit);
  m.def("in_K", [](const std::string& w) { return in_K(parse_word(w)); });
  m.def(
      "in_Ftau_m",
      [](const std::string& w, std::uint32_t level, std::uint64_t limit) -> std::optional<bool> {
        switch (in_Ftau_m(parse_word(w), level, limit)) {
          case Membership::Yes:
            return true;
          case Membership::No:
            return false;
          case Membership::Unknown:
            break;
        }
        return std::nullopt;
      },
      "True, False, or None when normalization hits the step limit", py::arg("word"), py::arg("m"),
      py::arg("step_limit") = kDefaultStepLimit);
}
