#include "cdual/json_io.hpp"

#include <sstream>

#include "cdual/errors.hpp"

namespace cdual {

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  if (!j.is_string()) throw SchemaError(pointer, "expected a rational string such as \"3/2\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParameterError& e) {
    throw SchemaError(pointer, e.what());
  }
}

const Json& require(const Json& j, const std::string& key, const std::string& pointer) {
  if (!j.is_object()) throw SchemaError(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(pointer + "/" + key, "missing member");
  return *it;
}

namespace {

Rational field(const Json& j, const std::string& key, const std::string& pointer) {
  return rational_from_json(require(j, key, pointer), pointer + "/" + key);
}

std::size_t size_field(const Json& j, const std::string& key, const std::string& pointer) {
  const Json& v = require(j, key, pointer);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
    throw SchemaError(pointer + "/" + key, "expected a positive integer");
  }
  return v.get<std::size_t>();
}

Json pair_json(std::size_t a, std::size_t b) { return Json::array({a, b}); }

}  // namespace

Json net_to_json(const Net2& net) {
  Json values = Json::array();
  for (const auto& v : net.values()) values.push_back(rational_to_json(v));
  return Json{{"width", net.width()}, {"height", net.height()}, {"values", std::move(values)}};
}

Net2 net_from_json(const Json& j, const std::string& pointer) {
  const std::size_t w = size_field(j, "width", pointer);
  const std::size_t h = size_field(j, "height", pointer);
  const Json& values = require(j, "values", pointer);
  if (!values.is_array()) throw SchemaError(pointer + "/values", "expected an array");
  if (values.size() != w * h) {
    throw SchemaError(pointer + "/values", "expected " + std::to_string(w * h) + " entries, got " +
                                               std::to_string(values.size()));
  }
  std::vector<Rational> out;
  out.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    out.push_back(rational_from_json(values[k], pointer + "/values/" + std::to_string(k)));
  }
  return Net2(w, h, std::move(out));
}

Json to_json(const BiDeg21Params& p) {
  return Json{{"b0", rational_to_json(p.b0())},
              {"b1", rational_to_json(p.b1())},
              {"b2", rational_to_json(p.b2())},
              {"a0", rational_to_json(p.a0())},
              {"a1", rational_to_json(p.a1())}};
}

Json to_json(const BiDeg22Params& p) {
  return Json{{"a0", rational_to_json(p.a0())},
              {"a1", rational_to_json(p.a1())},
              {"a2", rational_to_json(p.a2())},
              {"b0", rational_to_json(p.b0())},
              {"b1", rational_to_json(p.b1())}};
}

Json to_json(const Quadratic1D& p) {
  return Json{{"a", rational_to_json(p.a)}, {"b", rational_to_json(p.b)}, {"c", rational_to_json(p.c)}};
}

Json to_json(const GammaCoefficients& g) {
  return Json{{"a1", rational_to_json(g.a1)},
              {"a2", rational_to_json(g.a2)},
              {"b1", rational_to_json(g.b1)},
              {"b2", rational_to_json(g.b2)},
              {"c1", rational_to_json(g.c1)}};
}

Json to_json(const RhoSet& r) {
  return Json{{"rho10", rational_to_json(r.rho10)}, {"rho01", rational_to_json(r.rho01)},
              {"rho20", rational_to_json(r.rho20)}, {"rho02", rational_to_json(r.rho02)},
              {"rho11", rational_to_json(r.rho11)}, {"rho1", rational_to_json(r.rho1())},
              {"rho2", rational_to_json(r.rho2())}};
}

BiDeg21Params bideg21_from_json(const Json& j, const std::string& pointer) {
  return BiDeg21Params(field(j, "b0", pointer), field(j, "b1", pointer), field(j, "b2", pointer),
                       field(j, "a0", pointer), field(j, "a1", pointer));
}

BiDeg22Params bideg22_from_json(const Json& j, const std::string& pointer) {
  return BiDeg22Params(field(j, "a0", pointer), field(j, "a1", pointer), field(j, "a2", pointer),
                       field(j, "b0", pointer), field(j, "b1", pointer));
}

Quadratic1D quadratic_from_json(const Json& j, const std::string& pointer) {
  return {field(j, "a", pointer), field(j, "b", pointer), field(j, "c", pointer)};
}

GammaCoefficients gamma_from_json(const Json& j, const std::string& pointer) {
  return {field(j, "a1", pointer), field(j, "a2", pointer), field(j, "b1", pointer), field(j, "b2", pointer),
          field(j, "c1", pointer)};
}

RhoSet rho_from_json(const Json& j, const std::string& pointer) {
  RhoSet r{field(j, "rho10", pointer), field(j, "rho01", pointer), field(j, "rho20", pointer),
           field(j, "rho02", pointer), field(j, "rho11", pointer)};
  // Derived members are optional on input but must agree when present.
  if (j.contains("rho1") && field(j, "rho1", pointer) != r.rho1()) {
    throw SchemaError(pointer + "/rho1", "inconsistent with 2 rho10 - rho20");
  }
  if (j.contains("rho2") && field(j, "rho2", pointer) != r.rho2()) {
    throw SchemaError(pointer + "/rho2", "inconsistent with 2 rho01 - rho02");
  }
  return r;
}

Json to_json(const DecisionTrace& t) {
  Json checks = Json::array();
  for (const auto& c : t.checks) {
    Json entry{{"name", c.name}};
    if (const auto* v = std::get_if<Rational>(&c.value)) {
      entry["value"] = rational_to_json(*v);
    } else {
      const auto& pr = std::get<std::pair<Rational, Rational>>(c.value);
      entry["lhs"] = rational_to_json(pr.first);
      entry["rhs"] = rational_to_json(pr.second);
    }
    entry["satisfied"] = c.satisfied;
    checks.push_back(std::move(entry));
  }
  Json out{{"verdict", to_string(t.verdict)}, {"checks", std::move(checks)}};
  if (!t.note.empty()) out["note"] = t.note;
  return out;
}

Json to_json(const CmVerdict& v) {
  Json out{{"passed", v.passed},
           {"max_order", v.max_order_checked},
           {"window", pair_json(v.grid_width, v.grid_height)},
           {"label", v.label()}};
  if (v.witness) {
    out["witness"] = Json{{"order", pair_json(v.witness->order.i, v.witness->order.j)},
                          {"base", pair_json(v.witness->base.i, v.witness->base.j)},
                          {"value", rational_to_json(v.witness->value)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const CdspDecision& d) {
  Json out{{"verdict", to_string(d.verdict)}};
  out["branch"] = d.branch ? Json(to_string(*d.branch)) : Json(nullptr);
  out["gamma"] = to_json(d.gamma);
  out["rho"] = to_json(d.rho);
  out["trace"] = to_json(d.trace);
  if (d.verdict == CdspVerdict::precondition_violated) {
    out["failed_hypothesis"] = d.failed_hypothesis;
    out["witness"] = d.witness ? Json::array({d.witness->m, d.witness->n}) : Json(nullptr);
  }
  return out;
}

Json to_json(const CrossValidation& c) {
  return Json{{"decision", to_json(c.decision)}, {"oracle", to_json(c.oracle)},    {"consistent", c.consistent},
              {"witness_found", c.witness_found}, {"escalated", c.escalated}, {"status", c.status}};
}

Json to_json(const MomentReport& r) {
  return Json{{"m", r.m},
              {"n", r.n},
              {"integral", r.integral},
              {"expected", r.expected},
              {"residual", r.residual},
              {"evaluations", r.evaluations},
              {"passed", r.passed}};
}

Json shift_bundle(const MomentPolynomial& g, std::size_t width, std::size_t height) {
  const ShiftWeights w = shift_weights(g, width, height);
  const ShiftWeights dual = cauchy_dual_weights(w);
  const ExpansivityResult ex = check_torally_expansive(g, width, height);
  Json out{{"schema", "cdual.shift-bundle/1"}};
  out["gamma"] = to_json(g.coefficients());
  out["rho"] = to_json(rho_from_gamma(g));
  out["window"] = pair_json(width, height);
  out["weights"] = Json{{"commutes", w.commutes()},
                        {"all_positive", w.all_positive()},
                        {"max_squared_weight", rational_to_json(w.max_entry())},
                        {"w1sq_origin", rational_to_json(w.w1sq(0, 0))},
                        {"w2sq_origin", rational_to_json(w.w2sq(0, 0))}};
  out["dual_weights"] = Json{{"commutes", dual.commutes()},
                             {"max_squared_weight", rational_to_json(dual.max_entry())}};
  out["toral_3_isometry"] = verify_toral_m_isometry(g, 3, width, height).holds;
  out["torally_expansive"] = ex.expansive;
  out["coordinate_2_isometry"] = Json::array({is_coordinate_2_isometry(g, 1), is_coordinate_2_isometry(g, 2)});
  return out;
}

std::string weights_csv(const ShiftWeights& w, int direction) {
  if (direction != 1 && direction != 2) throw ParameterError("direction must be 1 or 2");
  std::ostringstream os;
  os << "m,n," << (direction == 1 ? "w1sq" : "w2sq") << "\n";
  for (std::size_t m = 0; m < w.width(); ++m) {
    for (std::size_t n = 0; n < w.height(); ++n) {
      os << m << "," << n << "," << to_string(direction == 1 ? w.w1sq(m, n) : w.w2sq(m, n)) << "\n";
    }
  }
  return os.str();
}

}  // namespace cdual
