/* C interface of the regrange library. Every function returns an rr_status; on failure
 * rr_last_error() describes the problem for the calling thread. Strings returned through
 * char** out-parameters are owned by the caller and released with rr_string_free. */
#ifndef REGRANGE_REGRANGE_H
#define REGRANGE_REGRANGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(REGRANGE_BUILDING)
#    define RR_API __declspec(dllexport)
#  else
#    define RR_API __declspec(dllimport)
#  endif
#else
#  define RR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rr_status {
  RR_OK = 0,
  RR_INVALID_INPUT = 1,   /* malformed literal, violated precondition */
  RR_OUT_OF_RANGE = 2,    /* requested regularity outside [m_u, M_u] */
  RR_CAP_EXCEEDED = 3,    /* enumeration larger than the configured cap */
  RR_INFEASIBLE = 4,      /* height/growth vectors that no Borel set realizes */
  RR_NOT_BOREL = 5,
  RR_CERTIFICATION = 6,   /* a certified postcondition failed */
  RR_INTERNAL = 7
} rr_status;

typedef struct rr_hilbert rr_hilbert;
typedef struct rr_ideal rr_ideal;

/* Pass as `ambient` to use the default n = u(1) - 1. */
#define RR_DEFAULT_AMBIENT (-1)

RR_API const char* rr_version(void);
RR_API const char* rr_last_error(void);
RR_API const char* rr_status_name(rr_status status);
RR_API void rr_string_free(char* s);

/* Hilbert functions */
RR_API rr_status rr_hilbert_parse(const char* literal, rr_hilbert** out);
RR_API void rr_hilbert_free(rr_hilbert* h);
/* Decimal value H(t). */
RR_API rr_status rr_hilbert_value(const rr_hilbert* h, int64_t t, char** out);
/* Literal form "1,4,8 ; 4z+1". */
RR_API rr_status rr_hilbert_literal(const rr_hilbert* h, char** out);
RR_API rr_status rr_hilbert_is_o_sequence(const rr_hilbert* h, int* out);
RR_API rr_status rr_hilbert_is_scheme(const rr_hilbert* h, int* out);
RR_API rr_status rr_regularity_range(const rr_hilbert* u, int ambient, int64_t* min_reg, int64_t* max_reg);

/* Ideals */
RR_API rr_status rr_construct(const rr_hilbert* u, int64_t m, int ambient, rr_ideal** out);
RR_API rr_status rr_construct_algebraic(const rr_hilbert* f, int64_t a, rr_ideal** out);
RR_API rr_status rr_lex_ideal(const rr_hilbert* h, int ambient, rr_ideal** out);
RR_API void rr_ideal_free(rr_ideal* ideal);
RR_API int rr_ideal_ambient(const rr_ideal* ideal);
RR_API int rr_ideal_first_var(const rr_ideal* ideal);
RR_API size_t rr_ideal_generator_count(const rr_ideal* ideal);
/* Copies the ambient+1 exponents of generator `index` into `exponents` (capacity `cap`). */
RR_API rr_status rr_ideal_generator(const rr_ideal* ideal, size_t index, int* exponents, size_t cap);
RR_API int64_t rr_ideal_regularity(const rr_ideal* ideal);
RR_API rr_status rr_ideal_to_string(const rr_ideal* ideal, char** out);
/* Quotient Hilbert function; the ideal must be strongly stable. */
RR_API rr_status rr_ideal_hilbert(const rr_ideal* ideal, rr_hilbert** out);

/* Formatted reports used by the command-line tool. `json` selects JSON over text.
 * On RR_CERTIFICATION from rr_report_enumerate and rr_selfcheck, *out still holds the report. */
RR_API rr_status rr_report_range(const char* hf, int ambient, int json, char** out);
RR_API rr_status rr_report_construct(const char* hf, int64_t m, int ambient, int json, char** out);
RR_API rr_status rr_report_algebraic(const char* hf, int64_t a, int json, char** out);
RR_API rr_status rr_report_lex(const char* hf, int ambient, int json, char** out);
RR_API rr_status rr_report_minfun(const char* poly, int64_t rho, int use_g, int json, char** out);
RR_API rr_status rr_report_gotzmann(const char* poly, int json, char** out);
RR_API rr_status rr_report_vectors(const char* hf, int64_t m, int ambient, int json, char** out);
/* cap == 0 selects the default cap. */
RR_API rr_status rr_report_enumerate(const char* hf, int ambient, uint64_t cap, unsigned threads, int json,
                                     char** out);
RR_API rr_status rr_selfcheck(uint64_t seed, uint64_t iters, int json, char** out);
/* Re-verifies the JSON emitted by rr_report_construct or rr_report_algebraic. */
RR_API rr_status rr_verify_certificate(const char* json_text, int json, char** out);

#ifdef __cplusplus
}
#endif

#endif
