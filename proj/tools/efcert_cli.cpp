// Command-line front end. Talks to the library only through the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "efcert/efcert.h"

namespace {

struct Session {
  efcert_session* h = nullptr;
  Session() { efcert_session_create(&h); }
  ~Session() { efcert_session_destroy(h); }
};

struct Report {
  efcert_report* h = nullptr;
  ~Report() { efcert_report_destroy(h); }
};

bool read_spec(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates of linear independence for values of E-functions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(efcert_version()));

  std::string spec_path;
  unsigned digits = 60;
  std::string coeff_bound = "1000000";
  std::string format = "text";
  long max_bits = 65536;
  auto* o_spec = app.add_option("--spec", spec_path, "Problem spec (JSON file, '-' for stdin)");
  auto* o_digits = app.add_option("--digits", digits, "Decimal digits for evaluation and relation search")
                       ->check(CLI::Range(1u, 20000u));
  auto* o_bound = app.add_option("--coeff-bound", coeff_bound, "Integer relation coefficient bound");
  auto* o_format = app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  auto* o_bits = app.add_option("--max-precision-bits", max_bits, "Working precision cap in bits");

  const char* commands[][2] = {
      {"singularities", "Singularity sets of the minimal operators"},
      {"transform", "Minimal operator of the psi-transform"},
      {"certify", "Linear independence certificate for E-function values"},
      {"certify-hyp", "Certificate for hypergeometric E-function values"},
      {"certify-si", "Certificate for values of Si integrals"},
      {"eval", "Certified numerical evaluation"},
      {"falsify", "Integer relation search against a certificate"},
      {"demo", "Run the built-in worked examples"},
  };
  for (auto& c : commands) app.add_subcommand(c[0], c[1]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  std::string task = app.get_subcommands().front()->get_name();

  std::string spec_text;
  if (*o_spec) {
    if (!read_spec(spec_path, spec_text)) {
      std::fprintf(stderr, "error: cannot read spec '%s'\n", spec_path.c_str());
      return EFCERT_E_INPUT;
    }
  } else if (task != "demo") {
    std::fprintf(stderr, "error: --spec is required for '%s'\n", task.c_str());
    return EFCERT_E_INPUT;
  }

  Session s;
  if (!s.h) return EFCERT_E_INTERNAL;
  efcert_status st = EFCERT_OK;
  if (*o_digits && st == EFCERT_OK) st = efcert_session_set_digits(s.h, digits);
  if (*o_bound && st == EFCERT_OK) st = efcert_session_set_coeff_bound(s.h, coeff_bound.c_str());
  if (*o_format && st == EFCERT_OK) st = efcert_session_set_format(s.h, format.c_str());
  if (*o_bits && st == EFCERT_OK) st = efcert_session_set_max_precision_bits(s.h, max_bits);
  if (st != EFCERT_OK) {
    std::fprintf(stderr, "error: %s\n", efcert_session_last_error(s.h));
    return EFCERT_E_INPUT;
  }

  Report r;
  st = efcert_run(s.h, task.c_str(), *o_spec ? spec_text.c_str() : nullptr, &r.h);
  if (!r.h) {
    std::fprintf(stderr, "error: %s: %s\n", efcert_status_string(st), efcert_session_last_error(s.h));
    return st == EFCERT_E_ARG ? EFCERT_E_INPUT : EFCERT_E_INTERNAL;
  }
  int code = efcert_report_exit_code(r.h);
  std::fputs(efcert_report_text(r.h), stdout);
  return code;
}
