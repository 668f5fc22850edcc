#ifndef RESLAT_RESLAT_H
#define RESLAT_RESLAT_H

/* C interface to the reslat library. Functions return an rl_status; on
 * failure rl_last_error() describes the problem for the calling thread.
 * Strings handed out by the library are released with rl_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RL_API __declspec(dllexport)
#else
#define RL_API __attribute__((visibility("default")))
#endif

typedef enum rl_status {
  RL_OK = 0,
  RL_MALFORMED_TABLE,
  RL_AXIOM_VIOLATION,
  RL_NOT_RESIDUATED,
  RL_PRECONDITION_VIOLATED,
  RL_DECOMPOSITION_FAILED,
  RL_EMBEDDING_VIOLATION,
  RL_PARSE_ERROR,
  RL_UNBOUND_VARIABLE,
  RL_RANGE_ERROR,
  RL_FORMAT_ERROR,
  RL_IO_ERROR,
  RL_INVALID_ARGUMENT,
  RL_INTERNAL_ERROR
} rl_status;

typedef struct rl_algebra rl_algebra;

RL_API const char* rl_status_name(rl_status status);
/* Message of the last failed call on this thread; "" if none. */
RL_API const char* rl_last_error(void);
RL_API void rl_string_free(char* s);

/* Canonical chain 0 < 1 < ... < n-1; product is row-major n*n. */
RL_API rl_status rl_algebra_chain(size_t n, const uint32_t* product, uint32_t e, uint32_t f,
                                  rl_algebra** out);
RL_API rl_status rl_algebra_load(const char* path, rl_algebra** out);
RL_API rl_status rl_algebra_save(const rl_algebra* a, const char* name, const char* path);
RL_API void rl_algebra_free(rl_algebra* a);

RL_API size_t rl_algebra_size(const rl_algebra* a);
RL_API rl_status rl_algebra_mul(const rl_algebra* a, uint32_t x, uint32_t y, uint32_t* out);
/* x \ z */
RL_API rl_status rl_algebra_ldiv(const rl_algebra* a, uint32_t x, uint32_t z, uint32_t* out);
/* z / y */
RL_API rl_status rl_algebra_rdiv(const rl_algebra* a, uint32_t z, uint32_t y, uint32_t* out);
/* Class verdict such as "IUL_omega chain". */
RL_API rl_status rl_algebra_classify(const rl_algebra* a, char** verdict);

/* Value of a formula; assignment[i] is the value of x(i+1). */
RL_API rl_status rl_formula_eval(const rl_algebra* a, const char* formula,
                                 const uint32_t* assignment, size_t count, uint32_t* out);
/* Canonical printed form of a formula. */
RL_API rl_status rl_formula_normalize(const char* formula, char** out);

/* Reports behind the command-line tool. On RL_OK, *outcome is 0 for
 * success or validity and 1 when a counterexample or violation was found,
 * and *text holds the report. */
RL_API rl_status rl_report_check(const char* algebra_path, int* outcome, char** text);
RL_API rl_status rl_report_fep(const char* algebra_path, const char* subset, const char* mode,
                               int* outcome, char** text);
RL_API rl_status rl_report_enumerate(size_t max_size, const char* cls, const char* emit_dir,
                                     int* outcome, char** text);
RL_API rl_status rl_report_decide(const char* cls, size_t max_size, const char* formula,
                                  const char* const* premises, size_t premise_count,
                                  int* outcome, char** text);
RL_API rl_status rl_report_decompose(const char* algebra_path, int* outcome, char** text);
RL_API rl_status rl_report_omega(const char* sequence_path, size_t length, int* outcome,
                                 char** text);

#ifdef __cplusplus
}
#endif

#endif
