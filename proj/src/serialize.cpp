#include "efcert/serialize.hpp"

#include <algorithm>

#include "efcert/error.hpp"

namespace efcert {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(ErrorCode::InvalidInput, (path.empty() ? std::string("spec") : path) + ": " + what);
}

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      bad(path, e.what());
    }
  }
  if (j.is_number_float()) bad(path, "floating-point numbers are not exact; write the value as a string");
  bad(path, "expected a rational number (string such as \"-3/4\" or an integer)");
}

Json polynomial_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.primitive_integers()) out.push_back(c.get_str());
  return out;
}

Polynomial polynomial_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) bad(path, "expected a nonempty coefficient list, constant term first");
  std::vector<Rational> cs;
  for (std::size_t i = 0; i < j.size(); ++i) cs.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  Polynomial p(cs);
  if (p.degree() < 1) bad(path, "polynomial must have degree at least 1");
  return p;
}

Json algebraic_json(const AlgebraicNumber& a) {
  if (auto r = a.as_rational()) return to_string(*r);
  Json box;
  box["re"] = to_string(a.box().re());
  box["im"] = to_string(a.box().im());
  box["rad"] = to_string(a.box().radius());
  Json out;
  out["poly"] = polynomial_json(a.poly());
  out["box"] = box;
  return out;
}

AlgebraicNumber algebraic_from_json(const Json& j, const std::string& path, const PrecisionPolicy& policy) {
  if (!j.is_object()) return AlgebraicNumber::from_rational(rational_from_json(j, path));
  require_keys(j, path, {"poly", "box"});
  if (!j.contains("poly") || !j.contains("box")) bad(path, "algebraic number needs \"poly\" and \"box\"");
  Polynomial p = polynomial_from_json(j["poly"], path + ".poly");
  const Json& b = j["box"];
  if (!b.is_object()) bad(path + ".box", "expected {\"re\", \"im\", \"rad\"}");
  require_keys(b, path + ".box", {"re", "im", "rad"});
  if (!b.contains("re") || !b.contains("rad")) bad(path + ".box", "box needs \"re\" and \"rad\"");
  Rational re = rational_from_json(b["re"], path + ".box.re");
  Rational im = b.contains("im") ? rational_from_json(b["im"], path + ".box.im") : Rational(0);
  Rational rad = rational_from_json(b["rad"], path + ".box.rad");
  if (rad <= 0) bad(path + ".box.rad", "radius must be positive");
  try {
    return AlgebraicNumber::from_box(p, ComplexBox({re, im}, rad), policy);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidInput) bad(path, e.what());
    throw;
  }
}

Json operator_json(const DiffOperator& op) {
  Json out;
  out["text"] = op.to_string();
  Json terms = Json::array();
  for (const auto& [i, p] : op.terms()) {
    Json t;
    t["dorder"] = i;
    Json cs = Json::array();
    for (const auto& c : p.coefficients()) cs.push_back(to_string(c));
    t["poly"] = {{"zmin", p.zmin()}, {"coeffs", cs}};
    terms.push_back(t);
  }
  out["terms"] = terms;
  return out;
}

Json rootset_json(const RootSet& s) {
  Json out;
  out["poly"] = polynomial_json(s.poly);
  out["includes_zero"] = s.includes_zero;
  out["provenance"] = provenance_name(s.provenance);
  Json els = Json::array();
  if (s.includes_zero) els.push_back("0");
  for (const auto& a : s.elements()) els.push_back(algebraic_json(a));
  out["elements"] = els;
  out["text"] = s.to_string();
  return out;
}

Json certificate_json(const Certificate& c) {
  Json out;
  out["kind"] = c.kind;
  out["verdict"] = verdict_name(c.verdict);
  out["statement"] = c.statement;
  Json hs = Json::array();
  for (const auto& h : c.hypotheses)
    hs.push_back({{"description", h.description},
                  {"anchor", h.anchor},
                  {"outcome", outcome_name(h.outcome)},
                  {"witness", h.witness}});
  out["hypotheses"] = hs;
  out["caveat"] = c.caveat;
  out["conditional_on"] = c.conditional_on;
  out["inputs"] = c.inputs;
  out["notes"] = c.notes;
  return out;
}

Json ball_json(const Ball& b, unsigned digits) {
  Rational e_re, e_im;
  Json out;
  out["re"] = to_decimal(b.mid.re, digits, &e_re);
  out["im"] = to_decimal(b.mid.im, digits, &e_im);
  // decimal rounding is folded into the stated error
  out["error"] = to_decimal_upper(b.radius + e_re + e_im, digits + 3);
  out["heuristic_tail"] = b.heuristic;
  return out;
}

Json relation_json(const RelationReport& r) {
  Json out;
  out["found"] = r.found;
  Json cs = Json::array();
  for (const auto& c : r.coefficients) cs.push_back(c.get_str());
  out["coefficients"] = cs;
  out["residual_bound"] = r.found ? to_decimal_upper(r.residual_bound, r.digits + 12) : "";
  out["excluded"] = r.excluded;
  out["digits"] = r.digits;
  out["coeff_bound"] = r.coeff_bound.get_str();
  out["evidence"] = "numerical";
  out["note"] = r.note;
  return out;
}

Json falsify_json(const FalsifyReport& r, unsigned digits) {
  Json out;
  out["skipped"] = r.skipped;
  out["notice"] = r.notice;
  Json vals = Json::array();
  for (std::size_t i = 0; i < r.values.size(); ++i)
    vals.push_back({{"label", r.labels[i]}, {"value", ball_json(r.values[i], std::min(digits, 30u))}});
  out["values"] = vals;
  out["relation"] = r.skipped ? Json() : relation_json(r.relation);
  out["contradiction"] = r.contradiction;
  return out;
}

void require_keys(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      bad(path.empty() ? key : path + "." + key, "unknown field");
  }
}

}  // namespace efcert
