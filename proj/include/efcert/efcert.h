/* C interface of the efcert library: run a problem specification (JSON) and
 * read back the report. Every object is an opaque handle owned by the caller
 * and released with the matching destroy function. Strings returned by the
 * library stay valid until the owning handle is destroyed. */
#ifndef EFCERT_H
#define EFCERT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define EFCERT_API __declspec(dllexport)
#else
#define EFCERT_API __attribute__((visibility("default")))
#endif

typedef enum efcert_status {
  EFCERT_OK = 0,
  EFCERT_E_INPUT = 1,         /* malformed spec or invalid mathematical input */
  EFCERT_E_CONTRADICTION = 2, /* falsifier found a relation for a certified family */
  EFCERT_E_PRECISION = 3,     /* working precision cap exceeded */
  EFCERT_E_INTERNAL = 4,
  EFCERT_E_ARG = 5            /* bad argument to this API (null handle, bad value) */
} efcert_status;

typedef struct efcert_session efcert_session;
typedef struct efcert_report efcert_report;

EFCERT_API const char* efcert_version(void);
EFCERT_API const char* efcert_status_string(efcert_status status);

EFCERT_API efcert_status efcert_session_create(efcert_session** out);
EFCERT_API void efcert_session_destroy(efcert_session* session);

/* Settings made here override the "options" of every spec run in the session. */
EFCERT_API efcert_status efcert_session_set_digits(efcert_session* session, unsigned digits);
/* Decimal integer string, >= 1. */
EFCERT_API efcert_status efcert_session_set_coeff_bound(efcert_session* session, const char* bound);
/* "text" or "json". */
EFCERT_API efcert_status efcert_session_set_format(efcert_session* session, const char* format);
EFCERT_API efcert_status efcert_session_set_max_precision_bits(efcert_session* session, long bits);
/* Message of the last failed call on this session, or "". */
EFCERT_API const char* efcert_session_last_error(const efcert_session* session);

/* Runs one task. `task` (e.g. "certify", "certify-hyp") may be NULL when the
 * spec names it; a spec without "task" takes `task`. `spec_json` may be NULL
 * for the demo task. On EFCERT_E_ARG no report is produced; otherwise *out
 * receives a report (possibly describing an error) and the return value
 * mirrors its exit code. */
EFCERT_API efcert_status efcert_run(efcert_session* session, const char* task, const char* spec_json,
                                    efcert_report** out);

/* Report rendered in the session's format. */
EFCERT_API const char* efcert_report_text(const efcert_report* report);
/* Report as a JSON document, whatever the format. */
EFCERT_API const char* efcert_report_json(const efcert_report* report);
/* 0 ok, 1 input error, 2 contradiction, 3 precision cap, 4 internal. */
EFCERT_API int efcert_report_exit_code(const efcert_report* report);
EFCERT_API void efcert_report_destroy(efcert_report* report);

#ifdef __cplusplus
}
#endif

#endif
