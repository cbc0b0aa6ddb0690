/* C interface to the hardimer library. All strings returned through `char**`
 * out-parameters are heap-allocated and must be released with hd_string_free.
 * Functions return HD_OK or an error code; hd_last_error() describes the most
 * recent failure on the calling thread. */
#ifndef HARDIMER_H
#define HARDIMER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HD_API __declspec(dllexport)
#else
#define HD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hd_status {
  HD_OK = 0,
  HD_ERR_INPUT = 1,
  HD_ERR_DOMAIN = 2,
  HD_ERR_RESOURCE = 3,
  HD_ERR_NUMERIC = 4,
  HD_ERR_SINGULAR = 5,
  HD_ERR_INTERNAL = 6,
  HD_ERR_IO = 7,
  HD_ERR_NULL = 8
} hd_status;

typedef enum hd_rep_kind { HD_REP_SB = 0, HD_REP_SR = 1, HD_REP_SUM = 2 } hd_rep_kind;
typedef enum hd_solve_mode { HD_SOLVE_RECURSIVE = 0, HD_SOLVE_RATIONAL = 1 } hd_solve_mode;
typedef enum hd_colour { HD_BLUE = 0, HD_RED = 1 } hd_colour;

typedef struct hd_poly hd_poly;
typedef struct hd_rep hd_rep;
typedef struct hd_series hd_series;
typedef struct hd_zn_report hd_zn_report;
typedef struct hd_verify_report hd_verify_report;

HD_API const char* hd_last_error(void);
HD_API const char* hd_status_name(hd_status status);
HD_API void hd_string_free(char* s);
HD_API const char* hd_version(void);

/* 0 selects the hardware concurrency. */
HD_API hd_status hd_set_threads(unsigned n);
HD_API unsigned hd_get_threads(void);

/* Polynomials in b3, r3, y with rational coefficients. */
HD_API void hd_poly_free(hd_poly* p);
HD_API hd_status hd_poly_to_string(const hd_poly* p, char** out);
HD_API hd_status hd_poly_to_json(const hd_poly* p, char** out);
HD_API size_t hd_poly_term_count(const hd_poly* p);
/* Exponents of term `index` and its coefficient as a decimal string "a" or "a/b". */
HD_API hd_status hd_poly_term(const hd_poly* p, size_t index, uint32_t* i, uint32_t* j, uint32_t* k,
                              char** coeff);
/* Exact evaluation; u, v, w and the result are rational strings. */
HD_API hd_status hd_poly_eval(const hd_poly* p, const char* u, const char* v, const char* w, char** out);
HD_API int hd_poly_equal(const hd_poly* a, const hd_poly* b);

/* Configurations. */
HD_API hd_status hd_census(const char* word, hd_poly** out);
HD_API hd_status hd_census_json(const char* word, char** out);
HD_API hd_status hd_configs_json(const char* word, char** out);
HD_API hd_status hd_count_bruteforce(const char* word, uint64_t* out);
/* Exact count through the representation, as a decimal string. */
HD_API hd_status hd_count_chdc(const char* word, char** out);
HD_API hd_status hd_tree_json(const char* config_json, char** out);

/* Linear representations. */
HD_API hd_status hd_rep_builtin(hd_rep_kind kind, hd_rep** out);
HD_API hd_status hd_rep_derive(hd_rep** out);
HD_API void hd_rep_free(hd_rep* r);
HD_API size_t hd_rep_dim(const hd_rep* r);
HD_API hd_status hd_rep_coefficient(const hd_rep* r, const char* word, hd_poly** out);
HD_API hd_status hd_rep_to_json(const hd_rep* r, char** out);
/* JSON list of entries where `found` differs from `expected`; empty list when equal. */
HD_API hd_status hd_rep_diff_json(const hd_rep* expected, const hd_rep* found, char** out);

/* Truncated series S_b or S_r. */
HD_API hd_status hd_series_solve(hd_solve_mode mode, size_t max_len, hd_colour colour, hd_series** out);
HD_API void hd_series_free(hd_series* s);
HD_API size_t hd_series_max_len(const hd_series* s);
HD_API hd_status hd_series_coefficient(const hd_series* s, const char* word, hd_poly** out);
HD_API hd_status hd_series_to_json(const hd_series* s, char** out);

/* Transfer sums. Rational parameters are strings such as "3/10" or "0.3". */
typedef struct hd_zn_level {
  unsigned n;
  double z_n;
  double partial_sum;
  double max_abs_reciprocal;
  uint64_t singular_count;
} hd_zn_level;

HD_API hd_status hd_z_hcd(const char* word, const char* u, const char* v, const char* w, char** out);
HD_API hd_status hd_zn(unsigned n, const char* u, const char* v, const char* w, int exact, int skip_singular,
                       hd_zn_report** out);
HD_API hd_status hd_zpartial(double gamma, unsigned n_max, const char* u, const char* v, const char* w,
                             int exact, int skip_singular, hd_zn_report** out);
HD_API void hd_zn_report_free(hd_zn_report* r);
HD_API size_t hd_zn_report_levels(const hd_zn_report* r);
HD_API hd_status hd_zn_report_level(const hd_zn_report* r, size_t index, hd_zn_level* out);
HD_API hd_status hd_zn_report_to_json(const hd_zn_report* r, char** out);

/* Growth. */
typedef struct hd_lyapunov_estimate {
  double alpha_hat;
  double std_error;
  uint64_t n;
  uint64_t trials;
  uint64_t seed;
  unsigned batches;
} hd_lyapunov_estimate;

typedef struct hd_spectral_report {
  double dominant;
  double second_modulus;
  double gap_ratio;
  unsigned iterations;
  double residual;
} hd_spectral_report;

HD_API hd_status hd_lyapunov(uint64_t n, uint64_t trials, uint64_t seed, unsigned batches,
                             hd_lyapunov_estimate* out);
HD_API hd_status hd_lyapunov_to_json(const hd_lyapunov_estimate* e, char** out);
HD_API hd_status hd_xi_spectrum(double tol, unsigned max_iter, hd_spectral_report* out);
HD_API hd_status hd_spectral_to_json(const hd_spectral_report* r, char** out);
HD_API hd_status hd_mean_growth(unsigned n, double* out);
/* Fills up to `capacity` rows of (n, mean growth); *count receives the full row count. */
HD_API hd_status hd_growth_curve(unsigned nmax, unsigned step, unsigned* ns, double* values, size_t capacity,
                                 size_t* count);
HD_API hd_status hd_subadditivity_check(size_t samples, size_t max_len, uint64_t seed, size_t* violations,
                                        char** json);

/* Oracle-equivalence suite. */
HD_API hd_status hd_verify(size_t max_len, hd_verify_report** out);
HD_API void hd_verify_report_free(hd_verify_report* r);
HD_API size_t hd_verify_report_rows(const hd_verify_report* r);
/* Borrowed strings, valid until the report is freed. */
HD_API hd_status hd_verify_report_row(const hd_verify_report* r, size_t index, const char** name, int* passed,
                                      const char** detail);
HD_API int hd_verify_report_all_passed(const hd_verify_report* r);

#ifdef __cplusplus
}
#endif

#endif
