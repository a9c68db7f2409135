#ifndef QCD_QCD_H
#define QCD_QCD_H

/*
 * C interface to libqcd: q-Catalan-Daehee numbers and polynomials over the
 * truncated ring Q[[u]], u = q - 1, and the p-adic cross-checks.
 *
 * Every function returns a qcd_status. On failure, qcd_last_error() holds a
 * message for the calling thread until its next libqcd call. Strings handed
 * out through char** parameters are owned by the caller and released with
 * qcd_string_free.
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(QCD_BUILDING_LIBRARY)
#define QCD_API __attribute__((visibility("default")))
#else
#define QCD_API
#endif

typedef enum qcd_status {
  QCD_OK = 0,
  QCD_INVALID_ARGUMENT = 1,
  QCD_NON_UNIT = 2,
  QCD_NOT_DIVISIBLE = 3,
  QCD_INSUFFICIENT_PRECISION = 4,
  QCD_NONZERO_INNER_CONSTANT = 5,
  QCD_NON_PIVOT_DENOMINATOR = 6,
  QCD_INDEX_OUT_OF_RANGE = 7,
  QCD_IDENTITY_VIOLATION = 8,
  QCD_DIVISION_BY_ZERO = 9,
  QCD_PRECISION_EXHAUSTED = 10,
  QCD_OUT_OF_DOMAIN = 11,
  QCD_BUDGET_EXCEEDED = 12,
  QCD_DEGENERATE_RATIO = 13,
  QCD_IO = 14,
  QCD_OUT_OF_MEMORY = 98,
  QCD_INTERNAL = 99
} qcd_status;

typedef struct qcd_engine qcd_engine;

QCD_API const char* qcd_version(void);
QCD_API const char* qcd_status_name(qcd_status status);
QCD_API const char* qcd_last_error(void);
QCD_API void qcd_string_free(char* s);

/* guard < 0 selects the default n_max + 2. */
QCD_API qcd_status qcd_engine_create(int n_max, int u_prec, int guard, qcd_engine** out);
QCD_API void qcd_engine_destroy(qcd_engine* engine);

/*
 * One value as JSON. family is one of
 *   dnq, dnq_theorem1, dnq_theorem2, bnq, bnq_recurrence, cor3   (u-series)
 *   daehee1, daehee2, dnqx, dnqx_theorem5                        (polynomials in x)
 * lambda is a decimal rational string, used by daehee1/daehee2; NULL means 1.
 */
QCD_API qcd_status qcd_engine_value(const qcd_engine* engine, const char* family, int n, const char* lambda,
                                    char** json_out);

/* Table for cmd_table as CSV (as_json = 0) or JSON text. */
QCD_API qcd_status qcd_table(const char* family, int n_max, int u_prec, int guard, const char* lambda, int as_json,
                             char** out);

/* Writes content to path through a temporary file and a rename. */
QCD_API qcd_status qcd_write_file(const char* path, const char* content);

/* Runs a verification suite. all_pass receives 1 when every case passed. */
QCD_API qcd_status qcd_verify(const char* suite, int n_max, int u_prec, int guard, unsigned threads,
                              char** report_json, int* all_pass);

typedef struct qcd_padic_request {
  long p;
  const char* c; /* decimal integer, q = 1 + c p */
  int t_val;     /* t = p^t_val, 0 for t = 0 */
  int N_max;
  int digits;
  const char* check;
  unsigned threads;
} qcd_padic_request;

QCD_API qcd_status qcd_padic(const qcd_padic_request* request, char** report_json, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
