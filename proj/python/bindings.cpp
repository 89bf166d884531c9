#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ocb/errors.hpp"
#include "ocb/reduce.hpp"

namespace py = pybind11;
using namespace ocb;

namespace {

std::string rat(const Rational& r) { return r.get_den() == 1 ? r.get_num().get_str() : r.get_str(); }

py::dict series_dict(const LaurentSeries& s) {
  py::list c;
  for (const auto& x : s.coeffs()) c.append(rat(x));
  py::dict d;
  d["valuation"] = s.valuation();
  d["trunc"] = s.trunc();
  d["coefficients"] = c;
  return d;
}

BivariatePoly relation_for(const Recipe& t, const Recipe& f, const std::string& relation) {
  if (!relation.empty()) return BivariatePoly::parse(relation);
  const int n = pole_order(evaluate_recipe(t, 1)), m = pole_order(evaluate_recipe(f, 1));
  const int trunc = relation_precision(n, m);
  return find_relation(evaluate_recipe(t, trunc), evaluate_recipe(f, trunc));
}

struct Session {
  Recipe t, f;
  BivariatePoly relation;
  FieldPtr k;
  std::unique_ptr<Generators> gens;
  NormalizedBasis nb;

  Session(const std::string& t_text, const std::string& f_text, const std::string& relation_text)
      : t(parse_recipe(t_text)), f(parse_recipe(f_text)) {
    relation = relation_for(t, f, relation_text);
    if (!relation.is_monic_in_y()) throw DegenerateInput("relation is not monic in y");
    k = FunctionField::make(relation);
    gens = std::make_unique<Generators>(t, f);
    py::gil_scoped_release release;
    nb = normalize_at_infinity(integral_basis(k), infinity_basis(k));
  }

  OrderCompleteBasis basis(int d, int trunc) const {
    py::gil_scoped_release release;
    return order_complete_basis(nb, d, *gens, trunc);
  }
};

py::dict basis_dict(const OrderCompleteBasis& b) {
  py::list entries;
  for (const auto& e : b.entries) {
    py::dict d;
    d["pole_order"] = e.pole_order;
    d["expr"] = to_display_string(e.expr);
    d["series"] = series_dict(e.series);
    entries.append(d);
  }
  py::dict out;
  out["d"] = b.d_used;
  out["gaps"] = b.gaps;
  out["entries"] = entries;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact order complete bases for rings of modular functions";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<EvaluationError>(m, "EvaluationError", base.ptr());
  py::register_exception<CoprimalityError>(m, "CoprimalityError", base.ptr());
  py::register_exception<InsufficientPrecision>(m, "InsufficientPrecision", base.ptr());
  py::register_exception<PrecisionError>(m, "PrecisionError", base.ptr());
  py::register_exception<DegenerateInput>(m, "DegenerateInput", base.ptr());
  py::register_exception<GapError>(m, "GapError", base.ptr());
  py::register_exception<InternalContractViolation>(m, "InternalContractViolation", base.ptr());

  m.def(
      "expand", [](const std::string& recipe, int trunc) { return series_dict(evaluate_recipe(parse_recipe(recipe), trunc)); },
      py::arg("recipe"), py::arg("trunc"), "q-expansion of a recipe to O(q^trunc).");

  m.def(
      "find_relation",
      [](const std::string& t, const std::string& f) {
        auto p = relation_for(parse_recipe(t), parse_recipe(f), "");
        return py::make_tuple(p.to_text(), to_display_string(p));
      },
      py::arg("t"), py::arg("f"), "Relation p(t, f) = 0 as (canonical text, display string).");

  m.def("check_congruence", &check_congruence, py::arg("a"), py::arg("b"), py::arg("m"), py::arg("count"));

  py::class_<Session>(m, "Session")
      .def(py::init<const std::string&, const std::string&, const std::string&>(), py::arg("t"), py::arg("f"),
           py::arg("relation") = "")
      .def_property_readonly("relation", [](const Session& s) { return s.relation.to_text(); })
      .def_property_readonly("d", [](const Session& s) { return s.nb.d; })
      .def(
          "basis", [](const Session& s, int d, int trunc) { return basis_dict(s.basis(d, trunc)); }, py::arg("d") = 1,
          py::arg("trunc") = 20)
      .def(
          "basis_json", [](const Session& s, int d, int trunc) { return to_json(s.basis(d, trunc)); }, py::arg("d") = 1,
          py::arg("trunc") = 20)
      .def(
          "express",
          [](const Session& s, const std::string& target, int d, int window) {
            auto tr = parse_recipe(target);
            Decomposition dec;
            FieldElement cf;
            int identity = 0;
            {
              py::gil_scoped_release release;
              auto b = order_complete_basis(s.nb, d, *s.gens, 10);
              const int margin = std::max(0, pole_order(evaluate_recipe(tr, 1))) + 10;
              for (auto& e : b.entries) e.series = to_qseries(e.expr, *s.gens, window + margin);
              auto ts = s.gens->at(window + margin).first;
              dec = express(evaluate_recipe(tr, window), b, ts, window);
              cf = closed_form(dec, b, s.k);
              identity = dec.exact() ? verify_identity(tr, cf, *s.gens, window) : dec.residual_valuation;
            }
            py::list terms;
            for (const auto& t : dec.terms) {
              py::list c;
              for (const auto& x : t.coeff.coeffs()) c.append(rat(x));
              terms.append(py::make_tuple(t.pole_order, c));
            }
            py::dict out;
            out["terms"] = terms;
            out["residual_valuation"] = dec.residual_valuation;
            out["certified_to"] = dec.certified_to;
            out["closed_form"] = to_display_string(cf);
            out["identity_valuation"] = identity;
            return out;
          },
          py::arg("target"), py::arg("d") = 1, py::arg("window") = 50);
}
