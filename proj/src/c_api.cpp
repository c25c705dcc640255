#include "efcert/efcert.h"

#include <new>
#include <optional>
#include <string>

#include "efcert/error.hpp"
#include "efcert/problem.hpp"

struct efcert_session {
  std::optional<unsigned> digits;
  std::optional<efcert::Integer> coeff_bound;
  std::optional<std::string> format;
  std::optional<long> max_bits;
  std::string last_error;
};

struct efcert_report {
  std::string text;
  std::string json;
  int exit_code = 0;
};

namespace {

efcert_status arg_error(efcert_session* s, const std::string& what) {
  if (s) s->last_error = what;
  return EFCERT_E_ARG;
}

efcert_status status_of(int exit_code) {
  switch (exit_code) {
    case efcert::kExitOk: return EFCERT_OK;
    case efcert::kExitInput: return EFCERT_E_INPUT;
    case efcert::kExitContradiction: return EFCERT_E_CONTRADICTION;
    case efcert::kExitPrecision: return EFCERT_E_PRECISION;
    default: return EFCERT_E_INTERNAL;
  }
}

efcert::RunResult error_result(const std::string& task, const std::string& what, int code) {
  efcert::RunResult r;
  r.exit_code = code;
  r.report = efcert::Json{{"version", 1}, {"task", task}, {"error", what}, {"exit_code", code}};
  r.text = "error: " + what + "\n";
  return r;
}

efcert::RunResult run_spec(const efcert_session& s, const char* task, const char* spec_json) {
  using efcert::Json;
  std::string task_label = task ? task : "";
  Json doc;
  if (spec_json) {
    try {
      doc = Json::parse(spec_json);
    } catch (const Json::parse_error& e) {
      return error_result(task_label, std::string("spec is not valid JSON: ") + e.what(), efcert::kExitInput);
    }
    if (!doc.is_object()) return error_result(task_label, "spec: expected a JSON object", efcert::kExitInput);
  } else {
    doc = Json{{"version", 1}};
  }
  if (task) {
    auto t = efcert::task_from_name(task);
    if (!t) return error_result(task_label, std::string("unknown task '") + task + "'", efcert::kExitInput);
    if (!doc.contains("task")) {
      doc["task"] = efcert::task_name(*t);
    } else if (!doc["task"].is_string() || efcert::task_from_name(doc["task"].get<std::string>()) != t) {
      return error_result(task_label, "spec task " + doc["task"].dump() + " does not match the requested task '" +
                                          task + "'", efcert::kExitInput);
    }
  }
  efcert::ProblemSpec spec;
  try {
    spec = efcert::parse_spec_json(doc);
  } catch (const efcert::Error& e) {
    return error_result(task_label, e.what(), e.code() == efcert::ErrorCode::PrecisionExceeded ? efcert::kExitPrecision
                                                                                                 : efcert::kExitInput);
  }
  if (s.digits) spec.options.digits = *s.digits;
  if (s.coeff_bound) spec.options.coeff_bound = *s.coeff_bound;
  if (s.format) spec.options.format = *s.format;
  if (s.max_bits) spec.options.max_precision_bits = *s.max_bits;
  efcert::RunResult r = efcert::run(spec);
  if (spec.options.format == "json") r.text = r.report.dump(2) + "\n";
  return r;
}

}  // namespace

extern "C" {

const char* efcert_version(void) { return "0.1.0"; }

const char* efcert_status_string(efcert_status status) {
  switch (status) {
    case EFCERT_OK: return "ok";
    case EFCERT_E_INPUT: return "input error";
    case EFCERT_E_CONTRADICTION: return "contradiction between certificate and falsifier";
    case EFCERT_E_PRECISION: return "precision cap exceeded";
    case EFCERT_E_INTERNAL: return "internal error";
    case EFCERT_E_ARG: return "invalid argument";
  }
  return "unknown status";
}

efcert_status efcert_session_create(efcert_session** out) {
  if (!out) return EFCERT_E_ARG;
  *out = new (std::nothrow) efcert_session();
  return *out ? EFCERT_OK : EFCERT_E_INTERNAL;
}

void efcert_session_destroy(efcert_session* session) { delete session; }

efcert_status efcert_session_set_digits(efcert_session* session, unsigned digits) {
  if (!session) return EFCERT_E_ARG;
  if (digits < 1 || digits > 20000) return arg_error(session, "digits must be between 1 and 20000");
  session->digits = digits;
  return EFCERT_OK;
}

efcert_status efcert_session_set_coeff_bound(efcert_session* session, const char* bound) {
  if (!session) return EFCERT_E_ARG;
  if (!bound) return arg_error(session, "coefficient bound is null");
  try {
    efcert::Rational b = efcert::parse_rational(bound);
    if (b.get_den() != 1 || b < 1) return arg_error(session, "coefficient bound must be a positive integer");
    session->coeff_bound = b.get_num();
  } catch (const std::exception& e) {
    return arg_error(session, std::string("coefficient bound: ") + e.what());
  }
  return EFCERT_OK;
}

efcert_status efcert_session_set_format(efcert_session* session, const char* format) {
  if (!session) return EFCERT_E_ARG;
  if (!format || (std::string(format) != "text" && std::string(format) != "json"))
    return arg_error(session, "format must be text or json");
  session->format = format;
  return EFCERT_OK;
}

efcert_status efcert_session_set_max_precision_bits(efcert_session* session, long bits) {
  if (!session) return EFCERT_E_ARG;
  if (bits < 64) return arg_error(session, "max precision bits must be at least 64");
  session->max_bits = bits;
  return EFCERT_OK;
}

const char* efcert_session_last_error(const efcert_session* session) {
  return session ? session->last_error.c_str() : "";
}

efcert_status efcert_run(efcert_session* session, const char* task, const char* spec_json, efcert_report** out) {
  if (!session || !out) return arg_error(session, "null session or output pointer");
  *out = nullptr;
  if (!task && !spec_json) return arg_error(session, "either a task or a spec is required");
  try {
    efcert::RunResult r = run_spec(*session, task, spec_json);
    auto* rep = new efcert_report();
    rep->text = std::move(r.text);
    rep->json = r.report.dump(2);
    rep->exit_code = r.exit_code;
    *out = rep;
    session->last_error = r.exit_code == 0 ? "" : r.report.value("error", "");
    return status_of(r.exit_code);
  } catch (const std::exception& e) {
    session->last_error = e.what();
    return EFCERT_E_INTERNAL;
  }
}

const char* efcert_report_text(const efcert_report* report) { return report ? report->text.c_str() : ""; }
const char* efcert_report_json(const efcert_report* report) { return report ? report->json.c_str() : ""; }
int efcert_report_exit_code(const efcert_report* report) { return report ? report->exit_code : efcert::kExitInternal; }
void efcert_report_destroy(efcert_report* report) { delete report; }

}  // extern "C"
