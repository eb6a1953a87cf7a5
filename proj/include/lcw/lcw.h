/* C interface to the weight-distribution library.
 *
 * Every function returns an lcw_status. On failure, lcw_last_error() holds a
 * message for the calling thread. Strings returned through char** are
 * allocated by the library and released with lcw_string_free. Handles are
 * opaque and released with their *_free function; passing NULL to a free
 * function is a no-op. */
#ifndef LCW_H
#define LCW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LCW_BUILDING_LIBRARY)
#    define LCW_API __declspec(dllexport)
#  else
#    define LCW_API __declspec(dllimport)
#  endif
#else
#  define LCW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lcw_status {
  LCW_OK = 0,
  LCW_ERR_NOT_PRIME_POWER = 1,
  LCW_ERR_TOO_LARGE = 2,
  LCW_ERR_DIVISION_BY_ZERO = 3,
  LCW_ERR_RANK_DEFICIENT = 4,
  LCW_ERR_BUDGET_EXCEEDED = 5,
  LCW_ERR_BAD_PARAMS = 6,
  LCW_ERR_INEXACT_DIVISION = 7,
  LCW_ERR_INEXACT_TRANSFORM = 8,
  LCW_ERR_ZERO_DENOMINATOR = 9,
  LCW_ERR_PARSE = 10,
  LCW_ERR_NULL_ARGUMENT = 11,
  LCW_ERR_INTERNAL = 12
} lcw_status;

typedef enum lcw_field_op {
  LCW_FIELD_ADD = 0,
  LCW_FIELD_SUB = 1,
  LCW_FIELD_MUL = 2,
  LCW_FIELD_DIV = 3,
  LCW_FIELD_INV = 4,
  LCW_FIELD_POW = 5
} lcw_field_op;

typedef struct lcw_field lcw_field;
typedef struct lcw_code lcw_code;
typedef struct lcw_distribution lcw_distribution;

/* Family name ("hamming2", "mds", ...) plus integer parameters; -1 = unset. */
typedef struct lcw_family_params {
  const char* family;
  int64_t n, k, m, q, r;
} lcw_family_params;

LCW_API void lcw_family_params_init(lcw_family_params* p, const char* family);

LCW_API const char* lcw_status_name(lcw_status s);
/* Message of the last failed call on this thread; "" if none. */
LCW_API const char* lcw_last_error(void);
/* Numeric payload of the last error: actual rank for RANK_DEFICIENT,
 * required work for BUDGET_EXCEEDED (saturated). */
LCW_API uint64_t lcw_last_error_detail(void);
LCW_API void lcw_string_free(char* s);

/* Fields. bound = 0 selects the default table bound 2^16. */
LCW_API lcw_status lcw_field_make(uint64_t q, uint64_t bound, lcw_field** out);
LCW_API void lcw_field_free(lcw_field* f);
LCW_API lcw_status lcw_field_info(const lcw_field* f, uint32_t* p, uint32_t* e, uint32_t* q);
/* Writes e + 1 modulus coefficients (constant first) if cap allows; *len is
 * always set. */
LCW_API lcw_status lcw_field_modulus(const lcw_field* f, uint32_t* coeffs, size_t cap,
                                     size_t* len);
/* b is the second operand, or the exponent for POW; ignored for INV. */
LCW_API lcw_status lcw_field_arith(const lcw_field* f, lcw_field_op op, int64_t a, int64_t b,
                                   uint32_t* out);

/* Codes. entries is k * n row-major. */
LCW_API lcw_status lcw_code_make(const lcw_field* f, size_t k, size_t n,
                                 const uint32_t* entries, lcw_code** out);
/* Matrix text: "q n k" then k rows; '#' comment lines. */
LCW_API lcw_status lcw_code_parse(const char* text, lcw_code** out);
LCW_API lcw_status lcw_code_from_family(const lcw_family_params* p, lcw_code** out);
LCW_API lcw_status lcw_code_dual(const lcw_code* c, lcw_code** out);
LCW_API void lcw_code_free(lcw_code* c);
LCW_API lcw_status lcw_code_info(const lcw_code* c, size_t* n, size_t* k, uint32_t* q);
/* Reduced generator in matrix text form. */
LCW_API lcw_status lcw_code_matrix_text(const lcw_code* c, char** out);
/* budget = 0 selects 2^28; workers = 0 selects the hardware concurrency. */
LCW_API lcw_status lcw_code_brute(const lcw_code* c, uint64_t budget, unsigned workers,
                                  lcw_distribution** out);
/* Distribution through the Tutte polynomial; budget = 0 selects 2^20.
 * details (optional) receives JSON with T(x, y) and chi. */
LCW_API lcw_status lcw_code_tutte(const lcw_code* c, uint64_t budget, lcw_distribution** out,
                                  char** details);

/* Families. */
LCW_API lcw_status lcw_family_distribution(const lcw_family_params* p, lcw_distribution** out);
/* Unreduced family generator in matrix text form. */
LCW_API lcw_status lcw_family_matrix_text(const lcw_family_params* p, char** out);

/* Distributions. */
LCW_API lcw_status lcw_distribution_parse_json(const char* text, lcw_distribution** out);
LCW_API void lcw_distribution_free(lcw_distribution* d);
LCW_API lcw_status lcw_distribution_info(const lcw_distribution* d, uint64_t* q, size_t* n,
                                         size_t* k);
/* A_i as a decimal string. */
LCW_API lcw_status lcw_distribution_count(const lcw_distribution* d, size_t i, char** out);
LCW_API lcw_status lcw_distribution_equal(const lcw_distribution* a, const lcw_distribution* b,
                                          int* equal);
LCW_API lcw_status lcw_distribution_json(const lcw_distribution* d, char** out);
LCW_API lcw_status lcw_distribution_csv(const lcw_distribution* d, int nonzero_only, int plot,
                                        char** out);
LCW_API lcw_status lcw_distribution_macwilliams(const lcw_distribution* d,
                                                lcw_distribution** out);

/* Analysis. newton != 0 adds the real-rootedness check; degree_budget = 0
 * selects the default. A polynomial over budget is reported as skipped. */
LCW_API lcw_status lcw_check_report(const lcw_distribution* d, const char* subject, int newton,
                                    size_t degree_budget, char** report_json,
                                    size_t* gap_count);
LCW_API lcw_status lcw_mds_threshold(int64_t n, int64_t k, char** json);
LCW_API lcw_status lcw_mds_verdict(int64_t n, int64_t k, int64_t q, char** json,
                                   int* log_concave);

/* Verification suites: hamming, ext_hamming, rm2, hrm_prm, mds, hamming_q,
 * tutte, all. m_lo/m_hi = -1 for the suite default; q_values may be NULL. */
LCW_API lcw_status lcw_verify(const char* suite, int64_t m_lo, int64_t m_hi,
                              const int64_t* q_values, size_t q_count, int json_format,
                              char** out, size_t* failed);

#ifdef __cplusplus
}
#endif

#endif /* LCW_H */
