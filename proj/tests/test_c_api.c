/* Exercises the C interface from plain C. */
#include <stdio.h>
#include <string.h>

#include "efcert/efcert.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main(void) {
  efcert_session* s = NULL;
  efcert_report* r = NULL;

  EXPECT(strlen(efcert_version()) > 0);
  EXPECT(efcert_session_create(NULL) == EFCERT_E_ARG);
  EXPECT(efcert_session_create(&s) == EFCERT_OK);
  EXPECT(efcert_run(NULL, "demo", NULL, &r) == EFCERT_E_ARG);
  EXPECT(efcert_run(s, NULL, NULL, &r) == EFCERT_E_ARG);
  EXPECT(r == NULL);

  EXPECT(efcert_session_set_format(s, "yaml") == EFCERT_E_ARG);
  EXPECT(strstr(efcert_session_last_error(s), "format") != NULL);
  EXPECT(efcert_session_set_coeff_bound(s, "-4") == EFCERT_E_ARG);
  EXPECT(efcert_session_set_coeff_bound(s, "1000") == EFCERT_OK);
  EXPECT(efcert_session_set_digits(s, 0) == EFCERT_E_ARG);
  EXPECT(efcert_session_set_digits(s, 30) == EFCERT_OK);

  const char* spec =
      "{\"version\": 1, \"functions\": [{\"type\": \"builtin\", \"name\": \"exp\"}],"
      " \"points\": [\"1\", \"2\"]}";
  EXPECT(efcert_run(s, "certify", spec, &r) == EFCERT_OK);
  EXPECT(r != NULL);
  EXPECT(efcert_report_exit_code(r) == 0);
  EXPECT(strstr(efcert_report_text(r), "CertifiedIndependent") != NULL);
  EXPECT(strstr(efcert_report_json(r), "\"verdict\": \"CertifiedIndependent\"") != NULL);
  efcert_report_destroy(r);

  /* The spec names a different task. */
  EXPECT(efcert_run(s, "eval", "{\"version\": 1, \"task\": \"demo\"}", &r) == EFCERT_E_INPUT);
  EXPECT(efcert_report_exit_code(r) == 1);
  efcert_report_destroy(r);

  EXPECT(efcert_run(s, "certify", "{not json", &r) == EFCERT_E_INPUT);
  EXPECT(strstr(efcert_report_text(r), "not valid JSON") != NULL);
  efcert_report_destroy(r);

  EXPECT(efcert_session_set_max_precision_bits(s, 128) == EFCERT_OK);
  EXPECT(efcert_session_set_digits(s, 200) == EFCERT_OK);
  EXPECT(efcert_run(s, "eval", spec, &r) == EFCERT_E_PRECISION);
  efcert_report_destroy(r);

  efcert_session_destroy(s);
  EXPECT(efcert_session_create(&s) == EFCERT_OK);
  EXPECT(efcert_session_set_format(s, "json") == EFCERT_OK);
  EXPECT(efcert_run(s, "demo", NULL, &r) == EFCERT_OK);
  EXPECT(efcert_report_text(r)[0] == '{');
  EXPECT(strstr(efcert_report_text(r), "\"all_expected\": true") != NULL);
  efcert_report_destroy(r);
  efcert_session_destroy(s);

  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("c api: all checks passed\n");
  return 0;
}
