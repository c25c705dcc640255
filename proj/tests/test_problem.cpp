#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "efcert/error.hpp"
#include "efcert/problem.hpp"

using namespace efcert;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("valid specs parse") {
  ProblemSpec s = parse_spec(R"({"version": 1, "task": "certify",
    "functions": [{"type": "builtin", "name": "exp"}], "points": ["1", "2"]})");
  CHECK(s.task == Task::Certify);
  CHECK(s.functions.size() == 1);
  CHECK(s.points.size() == 2);
  CHECK(s.options.digits == 60);
  CHECK(s.options.coeff_bound == 1000000);

  ProblemSpec r = parse_spec(R"({"version": 1, "task": "eval", "functions": [{"type": "builtin", "name": "exp"}],
    "points": [{"poly": [-2, 0, 1], "box": {"re": "1.414", "im": "0", "rad": "1/100"}}]})");
  REQUIRE(r.points.size() == 1);
  CHECK(r.points[0].poly() == Polynomial{-2, 0, 1});
  CHECK(r.points[0].box().re() > Rational(1414, 1000));
  CHECK(r.points[0].box().re() < Rational(1415, 1000));

  CHECK(task_from_name("certify-hyp") == Task::CertifyHyp);
}

TEST_CASE("schema violations name the field") {
  CHECK(error_of(R"({"version": 1, "task": "certify", "functions": [{"type": "builtin", "name": "exp"}],
    "points": ["1"], "colour": 3})").find("colour: unknown field") != std::string::npos);
  std::string hyp = error_of(R"({"version": 1, "task": "certify_hyp",
    "functions": [{"type": "hypergeometric", "params": {"b": ["-1"]}}], "points": ["1"]})");
  CHECK(hyp.find("functions[0].params") != std::string::npos);
  CHECK(hyp.find("nonpositive integer") != std::string::npos);
  CHECK(error_of(R"({"version": 1, "task": "certify_hyp",
    "functions": [{"type": "hypergeometric", "params": {"a": ["1"], "b": ["2"]}}], "points": ["1"]})")
            .find("s > r >= 0") != std::string::npos);
  CHECK(error_of(R"({"version": 1, "task": "eval", "functions": [{"type": "builtin", "name": "exp"}],
    "points": [0.5]})").find("points[0]") != std::string::npos);
  CHECK(error_of(R"({"version": 2, "task": "demo"})").find("version") != std::string::npos);
  CHECK(error_of(R"({"version": 1, "task": "certify_hyp", "functions": [{"type": "hypergeometric",
    "params": {"b": ["1"]}}], "points": ["1", "2"]})").find("one point per function") != std::string::npos);
  CHECK(error_of(R"({"version": 1, "task": "eval", "functions": [{"type": "builtin", "name": "exp"}],
    "points": [{"poly": [-2, 0, 1], "box": {"re": "5", "im": "0", "rad": "1/100"}}]})").find("points[0]") !=
        std::string::npos);
  CHECK(error_of(R"({"version": 1, "task": "singularities", "functions": [{"type": "ode",
    "params": {"operator": "z*∂ +", "initial": ["1"]}}]})").find("functions[0].params") != std::string::npos);
  CHECK(error_of("{not json").find("not valid JSON") != std::string::npos);
}

TEST_CASE("render then parse gives the same spec") {
  std::vector<std::string> docs{
      R"({"version": 1, "task": "certify", "functions": [{"type": "builtin", "name": "exp"},
          {"type": "builtin", "name": "J0", "scale": "-3/2"}], "points": ["1/2"], "mode": "main"})",
      R"({"version": 1, "task": "certify_hyp", "functions": [{"type": "hypergeometric", "name": "F",
          "params": {"a": ["1/3"], "b": ["1/2", "2"]}}], "points": ["7"], "options": {"digits": 30}})",
      R"({"version": 1, "task": "certify_si", "pairs": [["0", "1"], ["2", {"poly": [-2, 0, 1],
          "box": {"re": "1.4", "im": "0", "rad": "1/10"}}]]})",
      R"({"version": 1, "task": "falsify", "target": "certify", "functions": [{"type": "lagrange",
          "params": {"base": {"type": "builtin", "name": "exp"}, "nodes": ["1", "2"]}}], "points": ["1", "2"],
          "mode": "single", "options": {"coeff_bound": 1000, "digits": 40, "format": "json", "max_precision_bits": 4096}})",
      R"({"version": 1, "task": "transform", "functions": [{"type": "ode", "name": "g",
          "params": {"operator": "z*∂^2 + ∂ + z", "initial": ["1", "0"]}}]})",
      R"({"version": 1, "task": "demo"})"};
  for (const auto& d : docs) {
    ProblemSpec s = parse_spec(d);
    Json rendered = render_spec(s);
    ProblemSpec back = parse_spec(rendered.dump());
    CHECK(specs_equal(s, back));
    CHECK(render_spec(back).dump() == rendered.dump());
  }

  // Randomised certify specs.
  std::mt19937 rng(8);
  const char* builtins[] = {"exp", "J0", "Si"};
  for (int t = 0; t < 40; ++t) {
    ProblemSpec s;
    s.task = Task::Eval;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) {
      FunctionSpec f;
      f.name = builtins[rng() % 3];
      if (rng() % 2) {
        Rational sc(static_cast<long>(rng() % 19) - 9, 1 + rng() % 7);
        sc.canonicalize();
        if (sc != 0) f.scale = sc;
      }
      s.functions.push_back(f);
      Rational x(static_cast<long>(rng() % 41) - 20, 1 + rng() % 9);
      x.canonicalize();
      s.points.push_back(AlgebraicNumber::from_rational(x));
    }
    s.options.digits = 10 + rng() % 50;
    CHECK(specs_equal(s, parse_spec(render_spec(s).dump())));
  }
}

TEST_CASE("run: singularities, certify, exit codes") {
  RunResult sj = run(parse_spec(R"({"version": 1, "task": "singularities",
    "functions": [{"type": "builtin", "name": "J0"}]})"));
  CHECK(sj.exit_code == kExitOk);
  CHECK(sj.report["results"][0]["set"]["poly"] == Json::array({"1", "0", "1"}));

  std::string cert_doc = R"({"version": 1, "task": "certify", "functions": [{"type": "builtin", "name": "exp"}],
    "points": ["1", "2", "1/2"]})";
  RunResult c = run(parse_spec(cert_doc));
  CHECK(c.exit_code == kExitOk);
  CHECK(c.report["results"][0]["verdict"] == "CertifiedIndependent");
  CHECK(c.report["results"][0]["hypotheses"][1]["anchor"] == "point ratios avoid singularity ratios");
  CHECK(c.text.find("point ratios avoid singularity ratios") != std::string::npos);
  // deterministic output
  CHECK(run(parse_spec(cert_doc)).report.dump() == c.report.dump());

  RunResult inc = run(parse_spec(R"({"version": 1, "task": "certify",
    "functions": [{"type": "builtin", "name": "J0"}], "points": ["2", "-2"]})"));
  CHECK(inc.exit_code == kExitOk);
  CHECK(inc.report["results"][0]["verdict"] == "Inconclusive");

  RunResult cap = run(parse_spec(R"({"version": 1, "task": "eval", "functions": [{"type": "builtin", "name": "exp"}],
    "points": ["1"], "options": {"digits": 500, "max_precision_bits": 256}})"));
  CHECK(cap.exit_code == kExitPrecision);
  CHECK(cap.report.contains("error"));
}

TEST_CASE("run: falsify on the Lagrange construction") {
  RunResult r = run(parse_spec(R"({"version": 1, "task": "falsify", "functions": [{"type": "lagrange",
    "params": {"base": {"type": "builtin", "name": "exp"}, "nodes": ["1", "2"]}}], "points": ["1", "2"],
    "options": {"digits": 40, "coeff_bound": 1000}})"));
  CHECK(r.exit_code == kExitOk);
  const Json& f = r.report["results"][0]["falsify"];
  CHECK(f["relation"]["found"] == true);
  CHECK(f["contradiction"] == false);
  CHECK(r.report["results"][0]["certificate"]["verdict"] == "Inconclusive");
}

TEST_CASE("run: eval and certify_si reports") {
  RunResult e = run(parse_spec(R"({"version": 1, "task": "eval", "functions": [{"type": "builtin", "name": "exp"}],
    "points": ["1"], "options": {"digits": 25}})"));
  CHECK(e.exit_code == kExitOk);
  CHECK(e.report["results"][0]["value"]["re"].get<std::string>().rfind("2.718281828459045235360287", 0) == 0);
  RunResult si = run(parse_spec(R"({"version": 1, "task": "certify_si", "pairs": [["1", "2"], ["3", "4"]]})"));
  CHECK(si.report["results"][0]["verdict"] == "CertifiedIndependent");
}

TEST_CASE("demo reproduces the worked examples") {
  RunResult d = run(parse_spec(R"({"version": 1, "task": "demo"})"));
  CHECK(d.exit_code == kExitOk);
  CHECK(d.report["all_expected"] == true);
  CHECK(d.report["contradiction"] == false);
  CHECK(d.report["cases"].size() >= 15);
}
