#include "efcert/problem.hpp"

#include <sstream>

#include "efcert/demo.hpp"
#include "efcert/error.hpp"
#include "efcert/singularities.hpp"

namespace efcert {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(ErrorCode::InvalidInput, (path.empty() ? std::string("spec") : path) + ": " + what);
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& array_field(const Json& j, const char* key, const std::string& path) {
  const Json& v = j.at(key);
  if (!v.is_array()) bad(path + "." + key, "expected an array");
  return v;
}

std::vector<Rational> rationals_from(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], at(path, i)));
  return out;
}

Json rationals_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

// Rethrows errors from the numeric layers as path-qualified input errors.
template <class F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidInput || e.code() == ErrorCode::DomainError) bad(path, e.what());
    throw;
  }
}

FunctionSpec function_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected a function object");
  require_keys(j, path, {"type", "name", "params", "scale"});
  if (!j.contains("type") || !j["type"].is_string()) bad(path + ".type", "expected builtin | hypergeometric | ode | lagrange");
  FunctionSpec f;
  const std::string type = j["type"];
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad(path + ".name", "expected a string");
    f.name = j["name"];
  }
  if (j.contains("scale")) {
    f.scale = rational_from_json(j["scale"], path + ".scale");
    if (*f.scale == 0) bad(path + ".scale", "scale must be nonzero");
  }
  const std::string ppath = path + ".params";
  if (type == "builtin") {
    f.kind = FunctionSpec::Kind::Builtin;
    if (j.contains("params")) bad(ppath, "builtin functions take no parameters");
    if (f.name != "exp" && f.name != "J0" && f.name != "Si") bad(path + ".name", "builtin must be exp, J0 or Si");
    return f;
  }
  if (!j.contains("params") || !j["params"].is_object()) bad(ppath, "expected an object");
  const Json& p = j["params"];
  if (type == "hypergeometric") {
    f.kind = FunctionSpec::Kind::Hypergeometric;
    require_keys(p, ppath, {"a", "b"});
    if (p.contains("a")) f.params.upper = rationals_from(p["a"], ppath + ".a");
    if (!p.contains("b")) bad(ppath + ".b", "missing lower parameters");
    f.params.lower = rationals_from(p["b"], ppath + ".b");
    with_path(ppath, [&] {
      f.params.validate();
      return 0;
    });
  } else if (type == "ode") {
    f.kind = FunctionSpec::Kind::Ode;
    require_keys(p, ppath, {"operator", "initial"});
    if (!p.contains("operator") || !p["operator"].is_string()) bad(ppath + ".operator", "expected operator text");
    if (!p.contains("initial")) bad(ppath + ".initial", "missing initial values");
    f.op = p["operator"];
    f.initial = rationals_from(p["initial"], ppath + ".initial");
    with_path(ppath, [&] { return ef_from_ode(f.name.empty() ? "f" : f.name, parse_operator(f.op), f.initial); });
  } else if (type == "lagrange") {
    f.kind = FunctionSpec::Kind::Lagrange;
    require_keys(p, ppath, {"base", "nodes"});
    if (!p.contains("base")) bad(ppath + ".base", "missing base function");
    f.base.push_back(function_from_json(p["base"], ppath + ".base"));
    if (!p.contains("nodes")) bad(ppath + ".nodes", "missing nodes");
    f.nodes = rationals_from(p["nodes"], ppath + ".nodes");
    if (f.nodes.empty()) bad(ppath + ".nodes", "need at least one node");
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
      if (f.nodes[i] == 0) bad(at(ppath + ".nodes", i), "nodes must be nonzero");
      for (std::size_t k = 0; k < i; ++k)
        if (f.nodes[k] == f.nodes[i]) bad(at(ppath + ".nodes", i), "nodes must be distinct");
    }
  } else {
    bad(path + ".type", "unknown function type '" + type + "'");
  }
  return f;
}

Json function_json(const FunctionSpec& f) {
  Json out;
  switch (f.kind) {
    case FunctionSpec::Kind::Builtin:
      out["type"] = "builtin";
      break;
    case FunctionSpec::Kind::Hypergeometric:
      out["type"] = "hypergeometric";
      break;
    case FunctionSpec::Kind::Ode:
      out["type"] = "ode";
      break;
    case FunctionSpec::Kind::Lagrange:
      out["type"] = "lagrange";
      break;
  }
  if (!f.name.empty()) out["name"] = f.name;
  if (f.kind == FunctionSpec::Kind::Hypergeometric)
    out["params"] = {{"a", rationals_json(f.params.upper)}, {"b", rationals_json(f.params.lower)}};
  if (f.kind == FunctionSpec::Kind::Ode) out["params"] = {{"operator", f.op}, {"initial", rationals_json(f.initial)}};
  if (f.kind == FunctionSpec::Kind::Lagrange)
    out["params"] = {{"base", function_json(f.base.at(0))}, {"nodes", rationals_json(f.nodes)}};
  if (f.scale) out["scale"] = to_string(*f.scale);
  return out;
}

void check_arity(const ProblemSpec& s, Task task) {
  const std::size_t nf = s.functions.size(), np = s.points.size();
  auto none_of_pairs = [&] {
    if (!s.pairs.empty()) bad("pairs", "only used by certify_si");
  };
  switch (task) {
    case Task::Singularities:
    case Task::Transform:
      if (nf == 0) bad("functions", "at least one function is required");
      if (np) bad("points", std::string(task_name(task)) + " takes no points");
      none_of_pairs();
      break;
    case Task::Eval:
      if (nf == 0) bad("functions", "at least one function is required");
      if (np == 0) bad("points", "at least one point is required");
      none_of_pairs();
      break;
    case Task::Certify: {
      if (nf == 0) bad("functions", "at least one function is required");
      if (np == 0) bad("points", "at least one point is required");
      none_of_pairs();
      const std::string& m = s.mode;
      if (m == "main" && np != 1) bad("points", "mode main takes exactly one point");
      if (m == "multi" && np != nf) bad("points", "mode multi takes one point per function");
      if (m == "single" && nf != 1) bad("functions", "mode single takes exactly one function");
      if (m.empty() && nf != 1 && np != 1 && nf != np)
        bad("points", "point count must be 1, equal to the function count, or the function count must be 1");
      if (!m.empty() && m != "main" && m != "multi" && m != "single") bad("mode", "expected main, multi or single");
      break;
    }
    case Task::CertifyHyp:
      if (nf == 0) bad("functions", "at least one function is required");
      if (np != nf) bad("points", "certify_hyp takes one point per function");
      for (std::size_t i = 0; i < nf; ++i) {
        if (s.functions[i].kind != FunctionSpec::Kind::Hypergeometric)
          bad(at("functions", i), "certify_hyp needs hypergeometric functions");
        if (s.functions[i].scale) bad(at("functions", i) + ".scale", "certify_hyp does not take scaled functions");
      }
      none_of_pairs();
      break;
    case Task::CertifySi:
      if (nf) bad("functions", "certify_si takes no functions");
      if (np) bad("points", "certify_si takes its endpoints from pairs");
      if (s.pairs.empty()) bad("pairs", "at least one pair is required");
      break;
    case Task::Demo:
      if (nf || np || !s.pairs.empty()) bad("", "demo takes no functions, points or pairs");
      break;
    case Task::Falsify:
      break;
  }
}

Task falsify_target(const ProblemSpec& s) {
  if (s.target.empty() || s.target == "certify") return Task::Certify;
  if (s.target == "certify_hyp") return Task::CertifyHyp;
  if (s.target == "certify_si") return Task::CertifySi;
  bad("target", "expected certify, certify_hyp or certify_si");
}

std::string join_lines(const std::vector<std::string>& ls) {
  std::string out;
  for (const auto& l : ls) out += l + "\n";
  return out;
}

Certificate make_certificate(const ProblemSpec& s, Task task, const PrecisionPolicy& policy, std::stop_token stop) {
  if (task == Task::CertifyHyp) {
    std::vector<HypergeometricParams> ps;
    for (const auto& f : s.functions) ps.push_back(f.params);
    return certify_hypergeometric(ps, s.points, policy);
  }
  if (task == Task::CertifySi) return certify_si_integrals(s.pairs, policy);
  std::vector<EFunction> fs;
  for (const auto& f : s.functions) fs.push_back(build_function(f));
  std::string mode = s.mode;
  if (mode.empty()) mode = fs.size() == 1 ? "single" : s.points.size() == 1 ? "main" : "multi";
  if (mode == "single") return certify_single(fs[0], s.points, policy, stop);
  if (mode == "main") return certify_main(fs, s.points[0], policy, stop);
  return certify_multi(fs, s.points, policy, stop);
}

std::string falsify_text(const FalsifyReport& r) {
  if (r.skipped) return "falsifier: skipped (" + r.notice + ")";
  std::ostringstream out;
  out << "falsifier (numerical evidence, not a proof): ";
  if (r.relation.found) {
    out << "relation found with coefficients (";
    for (std::size_t i = 0; i < r.relation.coefficients.size(); ++i)
      out << (i ? ", " : "") << r.relation.coefficients[i].get_str();
    out << ") over (";
    for (std::size_t i = 0; i < r.labels.size(); ++i) out << (i ? ", " : "") << r.labels[i];
    out << ")";
  } else {
    out << r.relation.note;
  }
  if (r.contradiction) out << "\n  CONTRADICTION: the family was certified independent";
  if (!r.notice.empty()) out << "\n  note: " << r.notice;
  return out.str();
}

RunResult run_demo(const ProblemSpec& s, const PrecisionPolicy& policy, std::stop_token stop) {
  RunResult res;
  Json cases = Json::array();
  std::ostringstream text;
  bool contradiction = false, mismatch = false;

  Json sets = Json::array();
  text << "worked singularity sets\n";
  for (const auto& f : {ef_exp(), ef_bessel_j0(), ef_sin_integral()}) {
    RootSet rs = singularity_superset(f, stop);
    sets.push_back({{"function", f.name()}, {"set", rootset_json(rs)}});
    text << "  S(" << f.name() << ") = " << rs.to_string() << " [" << provenance_name(rs.provenance) << "]\n";
  }

  for (const auto& dc : demo_cases()) {
    Certificate c = dc.make(policy);
    Json entry;
    entry["name"] = dc.name;
    entry["expected"] = verdict_name(dc.expected);
    entry["matches"] = c.verdict == dc.expected;
    mismatch = mismatch || c.verdict != dc.expected;
    entry["certificate"] = certificate_json(c);
    text << "\n== " << dc.name << " (expected " << verdict_name(dc.expected) << ")\n" << render_text(c);
    if (dc.rational_points) {
      FalsifyReport fr = falsify(c, s.options.digits, s.options.coeff_bound, policy);
      entry["falsify"] = falsify_json(fr, s.options.digits);
      text << "  " << falsify_text(fr) << "\n";
      contradiction = contradiction || fr.contradiction;
      if (dc.expect_relation && !fr.relation.found) mismatch = true;
    } else {
      entry["falsify"] = {{"skipped", true}, {"notice", "irrational points: numeric cross-check not run in the demo"}};
    }
    cases.push_back(entry);
  }
  res.report["task"] = "demo";
  res.report["singularity_sets"] = sets;
  res.report["cases"] = cases;
  res.report["contradiction"] = contradiction;
  res.report["all_expected"] = !mismatch;
  text << "\n" << (mismatch ? "some demo verdicts differ from the expected ones" : "all demo verdicts as expected")
       << (contradiction ? "; CONTRADICTION detected" : "") << "\n";
  res.text = text.str();
  res.exit_code = contradiction ? kExitContradiction : mismatch ? kExitInternal : kExitOk;
  return res;
}

RunResult run_task(const ProblemSpec& s, std::stop_token stop) {
  PrecisionPolicy policy;
  policy.max_bits = s.options.max_precision_bits;
  if (s.task == Task::Demo) return run_demo(s, policy, stop);

  RunResult res;
  res.report["task"] = task_name(s.task);
  std::vector<std::string> lines;
  Json results = Json::array();
  switch (s.task) {
    case Task::Singularities:
      for (const auto& fs : s.functions) {
        EFunction f = build_function(fs);
        RootSet rs = singularity_superset(f, stop);
        results.push_back({{"function", f.name()}, {"set", rootset_json(rs)}});
        lines.push_back("S(" + f.name() + ") = " + rs.to_string() + "  [" + provenance_name(rs.provenance) + "]");
      }
      break;
    case Task::Transform:
      for (const auto& fs : s.functions) {
        EFunction f = build_function(fs);
        DiffOperator m = psi_transform(f.annihilator(), f.initial_values(), stop);
        RootSet lc = leading_coefficient_superset(f, stop);
        results.push_back({{"function", f.name()},
                           {"annihilator", operator_json(f.annihilator())},
                           {"psi_operator", operator_json(m)},
                           {"leading_coefficient", polynomial_json(leading_coefficient(m))},
                           {"singularity_superset", rootset_json(lc)}});
        lines.push_back(f.name() + ": L = " + f.annihilator().to_string());
        lines.push_back("  psi-transformed: " + m.to_string());
        lines.push_back("  leading coefficient roots: " + lc.to_string());
      }
      break;
    case Task::Eval:
      for (const auto& fs : s.functions) {
        EFunction f = build_function(fs);
        for (const auto& x : s.points) {
          Ball b = eval_efunction(f, x, s.options.digits, policy);
          results.push_back({{"function", f.name()}, {"point", algebraic_json(x)}, {"value", ball_json(b, s.options.digits)}});
          lines.push_back(f.name() + "(" + x.to_string(12) + ") = " + b.to_string(s.options.digits));
        }
      }
      break;
    case Task::Certify:
    case Task::CertifyHyp:
    case Task::CertifySi: {
      Certificate c = make_certificate(s, s.task, policy, stop);
      results.push_back(certificate_json(c));
      lines.push_back(render_text(c));
      break;
    }
    case Task::Falsify: {
      Certificate c = make_certificate(s, falsify_target(s), policy, stop);
      FalsifyReport fr = falsify(c, s.options.digits, s.options.coeff_bound, policy);
      results.push_back({{"certificate", certificate_json(c)}, {"falsify", falsify_json(fr, s.options.digits)}});
      lines.push_back(render_text(c));
      lines.push_back(falsify_text(fr));
      if (fr.contradiction) res.exit_code = kExitContradiction;
      break;
    }
    case Task::Demo:
      break;
  }
  res.report["results"] = results;
  res.text = join_lines(lines);
  return res;
}

}  // namespace

bool operator==(const FunctionSpec& a, const FunctionSpec& b) {
  return a.kind == b.kind && a.name == b.name && a.params.upper == b.params.upper &&
         a.params.lower == b.params.lower && a.op == b.op && a.initial == b.initial && a.base == b.base &&
         a.nodes == b.nodes && a.scale == b.scale;
}

const char* task_name(Task t) {
  switch (t) {
    case Task::Singularities: return "singularities";
    case Task::Transform: return "transform";
    case Task::Certify: return "certify";
    case Task::CertifyHyp: return "certify_hyp";
    case Task::CertifySi: return "certify_si";
    case Task::Eval: return "eval";
    case Task::Falsify: return "falsify";
    case Task::Demo: return "demo";
  }
  return "?";
}

std::optional<Task> task_from_name(std::string_view name) {
  std::string n(name);
  for (auto& ch : n)
    if (ch == '-') ch = '_';
  for (Task t : {Task::Singularities, Task::Transform, Task::Certify, Task::CertifyHyp, Task::CertifySi, Task::Eval,
                 Task::Falsify, Task::Demo})
    if (n == task_name(t)) return t;
  return std::nullopt;
}

ProblemSpec parse_spec(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::InvalidInput, std::string("spec is not valid JSON: ") + e.what());
  }
  return parse_spec_json(doc);
}

ProblemSpec parse_spec_json(const Json& doc) {
  if (!doc.is_object()) bad("", "expected a JSON object");
  require_keys(doc, "", {"version", "task", "functions", "points", "pairs", "mode", "target", "options"});
  ProblemSpec s;
  if (!doc.contains("version") || !doc["version"].is_number_integer() || doc["version"].get<int>() != 1)
    bad("version", "expected 1");
  if (!doc.contains("task") || !doc["task"].is_string()) bad("task", "missing task");
  auto task = task_from_name(doc["task"].get<std::string>());
  if (!task) bad("task", "unknown task '" + doc["task"].get<std::string>() + "'");
  s.task = *task;

  PrecisionPolicy policy;
  if (doc.contains("options")) {
    const Json& o = doc["options"];
    if (!o.is_object()) bad("options", "expected an object");
    require_keys(o, "options", {"digits", "coeff_bound", "format", "max_precision_bits"});
    if (o.contains("digits")) {
      if (!o["digits"].is_number_unsigned() || o["digits"].get<unsigned>() < 1 || o["digits"].get<unsigned>() > 20000)
        bad("options.digits", "expected an integer between 1 and 20000");
      s.options.digits = o["digits"];
    }
    if (o.contains("coeff_bound")) {
      Rational b = rational_from_json(o["coeff_bound"], "options.coeff_bound");
      if (b.get_den() != 1 || b < 1) bad("options.coeff_bound", "expected a positive integer");
      s.options.coeff_bound = b.get_num();
    }
    if (o.contains("format")) {
      if (!o["format"].is_string() || (o["format"] != "text" && o["format"] != "json"))
        bad("options.format", "expected text or json");
      s.options.format = o["format"];
    }
    if (o.contains("max_precision_bits")) {
      if (!o["max_precision_bits"].is_number_unsigned() || o["max_precision_bits"].get<long>() < 64)
        bad("options.max_precision_bits", "expected an integer >= 64");
      s.options.max_precision_bits = o["max_precision_bits"];
    }
  }
  policy.max_bits = s.options.max_precision_bits;

  if (doc.contains("functions")) {
    const Json& fs = array_field(doc, "functions", "");
    for (std::size_t i = 0; i < fs.size(); ++i) s.functions.push_back(function_from_json(fs[i], at("functions", i)));
  }
  if (doc.contains("points")) {
    const Json& ps = array_field(doc, "points", "");
    for (std::size_t i = 0; i < ps.size(); ++i) s.points.push_back(algebraic_from_json(ps[i], at("points", i), policy));
  }
  if (doc.contains("pairs")) {
    const Json& ps = array_field(doc, "pairs", "");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (!ps[i].is_array() || ps[i].size() != 2) bad(at("pairs", i), "expected [alpha, beta]");
      s.pairs.emplace_back(algebraic_from_json(ps[i][0], at("pairs", i) + "[0]", policy),
                           algebraic_from_json(ps[i][1], at("pairs", i) + "[1]", policy));
    }
  }
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) bad("mode", "expected a string");
    s.mode = doc["mode"];
    if (s.task != Task::Certify && !(s.task == Task::Falsify && (doc.value("target", "certify") == "certify")))
      bad("mode", "only used by certify");
  }
  if (doc.contains("target")) {
    if (!doc["target"].is_string()) bad("target", "expected a string");
    if (s.task != Task::Falsify) bad("target", "only used by falsify");
    s.target = doc["target"];
  }
  check_arity(s, s.task == Task::Falsify ? falsify_target(s) : s.task);
  return s;
}

Json render_spec(const ProblemSpec& s) {
  Json out;
  out["version"] = s.version;
  out["task"] = task_name(s.task);
  if (!s.functions.empty()) {
    Json fs = Json::array();
    for (const auto& f : s.functions) fs.push_back(function_json(f));
    out["functions"] = fs;
  }
  if (!s.points.empty()) {
    Json ps = Json::array();
    for (const auto& p : s.points) ps.push_back(algebraic_json(p));
    out["points"] = ps;
  }
  if (!s.pairs.empty()) {
    Json ps = Json::array();
    for (const auto& [a, b] : s.pairs) ps.push_back(Json::array({algebraic_json(a), algebraic_json(b)}));
    out["pairs"] = ps;
  }
  if (!s.mode.empty()) out["mode"] = s.mode;
  if (!s.target.empty()) out["target"] = s.target;
  out["options"] = {{"digits", s.options.digits},
                    {"coeff_bound", s.options.coeff_bound.get_str()},
                    {"format", s.options.format},
                    {"max_precision_bits", s.options.max_precision_bits}};
  return out;
}

bool specs_equal(const ProblemSpec& a, const ProblemSpec& b) {
  if (a.version != b.version || a.task != b.task || !(a.functions == b.functions) || a.mode != b.mode ||
      a.target != b.target || !(a.options == b.options) || a.points.size() != b.points.size() ||
      a.pairs.size() != b.pairs.size())
    return false;
  for (std::size_t i = 0; i < a.points.size(); ++i)
    if (!alg_equals(a.points[i], b.points[i])) return false;
  for (std::size_t i = 0; i < a.pairs.size(); ++i)
    if (!alg_equals(a.pairs[i].first, b.pairs[i].first) || !alg_equals(a.pairs[i].second, b.pairs[i].second))
      return false;
  return true;
}

EFunction build_function(const FunctionSpec& spec) {
  auto built = [&]() -> EFunction {
    switch (spec.kind) {
      case FunctionSpec::Kind::Builtin:
        if (spec.name == "exp") return ef_exp();
        if (spec.name == "J0") return ef_bessel_j0();
        if (spec.name == "Si") return ef_sin_integral();
        fail(ErrorCode::InvalidInput, "unknown builtin '" + spec.name + "'");
      case FunctionSpec::Kind::Hypergeometric: {
        EFunction f = ef_hypergeometric(spec.params);
        if (!spec.name.empty()) f.renamed(spec.name);
        return f;
      }
      case FunctionSpec::Kind::Ode:
        return ef_from_ode(spec.name.empty() ? "f" : spec.name, parse_operator(spec.op), spec.initial);
      case FunctionSpec::Kind::Lagrange: {
        EFunction g = ef_lagrange_combo(build_function(spec.base.at(0)), spec.nodes);
        if (!spec.name.empty()) g.renamed(spec.name);
        return g;
      }
    }
    fail(ErrorCode::InvalidInput, "unknown function kind");
  }();
  if (!spec.scale || *spec.scale == 1) return built;
  return ef_scale(built, *spec.scale);
}

RunResult run(const ProblemSpec& spec, std::stop_token stop) {
  RunResult res;
  try {
    res = run_task(spec, stop);
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::InvalidInput:
      case ErrorCode::DomainError:
      case ErrorCode::Unsupported:
        res.exit_code = kExitInput;
        break;
      case ErrorCode::PrecisionExceeded:
        res.exit_code = kExitPrecision;
        break;
      case ErrorCode::Contradiction:
        res.exit_code = kExitContradiction;
        break;
      case ErrorCode::Cancelled:
        res.exit_code = kExitInternal;
        break;
    }
    res.report = Json{{"task", task_name(spec.task)}, {"error", e.what()}};
    res.text = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    res.exit_code = kExitInternal;
    res.report = Json{{"task", task_name(spec.task)}, {"error", e.what()}};
    res.text = std::string("internal error: ") + e.what() + "\n";
  }
  Json doc;
  doc["version"] = 1;
  for (auto& [k, v] : res.report.items()) doc[k] = v;
  doc["exit_code"] = res.exit_code;
  res.report = doc;
  return res;
}

}  // namespace efcert
