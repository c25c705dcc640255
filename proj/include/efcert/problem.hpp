#pragma once

#include <optional>
#include <stop_token>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "efcert/serialize.hpp"

namespace efcert {

enum class Task { Singularities, Transform, Certify, CertifyHyp, CertifySi, Eval, Falsify, Demo };

const char* task_name(Task t);
/// Accepts "certify_hyp" and "certify-hyp" alike.
std::optional<Task> task_from_name(std::string_view name);

enum ExitStatus { kExitOk = 0, kExitInput = 1, kExitContradiction = 2, kExitPrecision = 3, kExitInternal = 4 };

struct FunctionSpec {
  enum class Kind { Builtin, Hypergeometric, Ode, Lagrange };
  Kind kind = Kind::Builtin;
  /// Builtin: exp | J0 | Si. Otherwise an optional display name.
  std::string name;
  HypergeometricParams params;
  std::string op;  // ode: operator text
  std::vector<Rational> initial;
  /// Lagrange: g(z) = sum_i L_i(z) base(z / node_i).
  std::vector<FunctionSpec> base;
  std::vector<Rational> nodes;
  std::optional<Rational> scale;

  friend bool operator==(const FunctionSpec& a, const FunctionSpec& b);
};

struct Options {
  unsigned digits = 60;
  Integer coeff_bound = 1000000;
  std::string format = "text";
  long max_precision_bits = 65536;
  friend bool operator==(const Options& a, const Options& b) {
    return a.digits == b.digits && a.coeff_bound == b.coeff_bound && a.format == b.format &&
           a.max_precision_bits == b.max_precision_bits;
  }
};

struct ProblemSpec {
  int version = 1;
  Task task = Task::Demo;
  std::vector<FunctionSpec> functions;
  std::vector<AlgebraicNumber> points;
  /// certify_si: integration endpoints.
  std::vector<std::pair<AlgebraicNumber, AlgebraicNumber>> pairs;
  /// certify / falsify: "main", "multi" or "single"; empty picks by arity.
  std::string mode;
  /// falsify: which certificate to cross-check ("certify", "certify_hyp", "certify_si").
  std::string target;
  Options options;
};

/// Strict parse: unknown fields, inexact numbers and arity violations are
/// InvalidInput errors with a path to the offending field.
ProblemSpec parse_spec(std::string_view text);
ProblemSpec parse_spec_json(const Json& doc);
Json render_spec(const ProblemSpec& spec);
/// Field-wise equality; points are compared as algebraic numbers.
bool specs_equal(const ProblemSpec& a, const ProblemSpec& b);

EFunction build_function(const FunctionSpec& f);

struct RunResult {
  Json report;
  std::string text;
  int exit_code = kExitOk;
};

/// Executes the task. Never throws for task-level failures: they become an
/// "error" report with the matching exit status.
RunResult run(const ProblemSpec& spec, std::stop_token stop = {});

}  // namespace efcert
