#ifndef CYCLICBOUND_H
#define CYCLICBOUND_H

#include <stddef.h>
#include <stdint.h>

#if defined(CYCLICBOUND_BUILDING)
#define CB_API __attribute__((visibility("default")))
#else
#define CB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every function returning int returns one of these; details via cb_last_error(). */
enum {
    CB_OK = 0,
    CB_INVALID_ARGUMENT = 1,
    CB_COMPOSITE_CHARACTERISTIC = 2,
    CB_FIELD_TOO_LARGE = 3,
    CB_NOT_COPRIME = 4,
    CB_ORDER_DOES_NOT_DIVIDE = 5,
    CB_FIELD_MISMATCH = 6,
    CB_DIVISION_BY_ZERO = 7,
    CB_DUPLICATE_COSET = 8,
    CB_SEARCH_CAP_EXCEEDED = 9,
    CB_TOO_MANY_CODEWORDS = 10,
    CB_PRECONDITION_VIOLATED = 11,
    CB_INVALID_GEOMETRY = 12,
    CB_DEGENERATE_COVER = 13,
    CB_LENGTH_MISMATCH = 14,
    CB_ZERO_SYNDROME = 15,
    CB_INCONSISTENT_LOCATOR = 16,
    CB_EVALUATOR_SINGULAR = 17,
    CB_VALUE_OUTSIDE_BASE_FIELD = 18,
    CB_PARSE_ERROR = 19,
    CB_INTERNAL = 20
};

typedef struct cb_code cb_code;
typedef struct cb_decoder cb_decoder;

typedef struct cb_bound_options {
    int bch;             /* nonzero: run the bound */
    int ht;
    int nzl;
    int oracle;
    uint32_t max_n_l;    /* largest locator length among the candidates */
    uint32_t max_u;      /* largest extension degree for RS locators */
    int search_w;        /* search multipliers w != 1 */
    uint32_t ht_max_n;   /* HT search is skipped above this length */
    uint64_t oracle_cap; /* most codewords the oracle enumerates */
    unsigned threads;    /* 0: CYCLIC_BOUND_THREADS or hardware concurrency */
} cb_bound_options;

CB_API const char* cb_version(void);
/* Message of the last failing call on this thread; "" if none. */
CB_API const char* cb_last_error(void);
CB_API const char* cb_status_name(int status);
/* Frees strings returned through char** out-parameters. */
CB_API void cb_string_free(char* s);

CB_API void cb_bound_options_default(cb_bound_options* opts);

CB_API int cb_code_from_reps(uint32_t q, uint32_t n, const int64_t* reps, size_t count, const char* name, cb_code** out);
/* JSON code spec; *warnings (may be NULL) receives a JSON array of strings. */
CB_API int cb_code_from_json(const char* json, cb_code** out, char** warnings);
CB_API void cb_code_free(cb_code* code);
CB_API int cb_code_json(const cb_code* code, char** out);
CB_API uint32_t cb_code_length(const cb_code* code);
CB_API uint32_t cb_code_dimension(const cb_code* code);

CB_API int cb_cosets_json(uint32_t n, uint32_t q, char** out);
CB_API int cb_bound_report_json(const cb_code* code, const cb_bound_options* opts, char** out);

/* locator: NULL or "" picks the best candidate under opts (opts may be NULL).
   Otherwise trivial | spc:N | rs:N:K[:u] | hamming | d2:a:g | d3:a:g:r | custom:N:i,j,..[:u]. */
CB_API int cb_decoder_new(const cb_code* code, const char* locator, const cb_bound_options* opts, cb_decoder** out);
CB_API void cb_decoder_free(cb_decoder* dec);
CB_API int cb_decoder_json(const cb_decoder* dec, char** out);
/* received: base-q digits, x^0 first (hex characters for q <= 16, else comma separated).
   Decoding failures are reported inside the JSON with CB_OK. */
CB_API int cb_decode_json(const cb_decoder* dec, const char* received, char** out);
CB_API int cb_encode(const cb_code* code, const char* message, char** out);

/* CSV nu,d0,m,d_star,ht,ratio with m in [nu + m_lo, nu + m_hi]; m_lo >= 2. */
CB_API int cb_ratio_grid_csv(uint32_t nu_lo, uint32_t nu_hi, uint32_t d0_lo, uint32_t d0_hi, uint32_t m_lo, uint32_t m_hi,
                             char** out);

/* only: NULL for every fixture. *passed is 1 when no check failed. */
CB_API int cb_paper_check_json(const char* only, char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif
