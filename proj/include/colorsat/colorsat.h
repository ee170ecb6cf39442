/* C interface to the colorsat solver library.
 *
 * All functions return a colorsat_status; out-parameters are written only on
 * COLORSAT_OK (plus COLORSAT_UNSAT where documented). Objects returned
 * through double pointers are owned by the caller and released with the
 * matching _free function. colorsat_last_error() describes the most recent
 * failure on the calling thread.
 */

#ifndef COLORSAT_H
#define COLORSAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define COLORSAT_API __declspec(dllexport)
#else
#define COLORSAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum colorsat_status {
  COLORSAT_OK = 0,
  COLORSAT_UNSAT = 1,        /* no satisfying assignment exists */
  COLORSAT_ERR_ARGUMENT = 2, /* null pointer or invalid argument */
  COLORSAT_ERR_IO = 3,       /* file could not be read or written */
  COLORSAT_ERR_PARSE = 4,    /* malformed DIMACS input */
  COLORSAT_ERR_CLASS = 5,    /* formula outside the accepted class */
  COLORSAT_ERR_CAP = 6,      /* oracle enumeration cap exceeded */
  COLORSAT_ERR_INTERNAL = 7
} colorsat_status;

typedef struct colorsat_formula colorsat_formula;
typedef struct colorsat_solution colorsat_solution;

typedef struct colorsat_class_report {
  int is_3cnf;
  int is_monotone;
  int negated_once;
  int k_max;     /* highest positive occurrence count */
  int strict_31; /* every variable: once negated, exactly 3 positive */
  int relaxed_31;/* every variable: once negated, at most 3 positive */
} colorsat_class_report;

typedef struct colorsat_solve_options {
  uint64_t seed;       /* used when random_ties is nonzero */
  int random_ties;     /* 0: lowest-variable tie break (default) */
  int64_t repair_budget; /* reassignments per repair; 0 = 4 * variables */
} colorsat_solve_options;

typedef struct colorsat_solve_stats {
  uint64_t expansions;
  uint64_t reassignments;
  uint64_t repairs;
  uint64_t fallback_invocations;
  uint64_t loop_detections;
  uint64_t case_ishape;
  uint64_t case_cshape;
  uint64_t case_cluster;
  uint64_t case_composite;
} colorsat_solve_stats;

COLORSAT_API const char* colorsat_version(void);
COLORSAT_API const char* colorsat_status_name(colorsat_status status);
COLORSAT_API const char* colorsat_last_error(void);
COLORSAT_API void colorsat_string_free(char* text);

/* -- formulas ----------------------------------------------------------- */

COLORSAT_API colorsat_status colorsat_formula_parse_file(
    const char* path, colorsat_formula** out);
COLORSAT_API colorsat_status colorsat_formula_parse_string(
    const char* text, colorsat_formula** out);
COLORSAT_API colorsat_status colorsat_formula_write_file(
    const colorsat_formula* formula, const char* path);
COLORSAT_API colorsat_status colorsat_formula_write_string(
    const colorsat_formula* formula, char** out);
COLORSAT_API void colorsat_formula_free(colorsat_formula* formula);

COLORSAT_API int colorsat_formula_var_count(const colorsat_formula* formula);
COLORSAT_API int colorsat_formula_color_count(const colorsat_formula* formula);
COLORSAT_API int colorsat_formula_positive_count(
    const colorsat_formula* formula);

/* Signed literals of clause `index` (negative clauses first, then positive,
 * matching the written file order). */
COLORSAT_API colorsat_status colorsat_formula_clause(
    const colorsat_formula* formula, int index, int literals[3]);

COLORSAT_API colorsat_status colorsat_formula_classify(
    const colorsat_formula* formula, colorsat_class_report* out);
/* Positive occurrence count of a variable, or -1 when out of range. */
COLORSAT_API int colorsat_formula_positive_occurrences(
    const colorsat_formula* formula, int var);

/* values[i] nonzero means variable i+1 is true; len must equal the variable
 * count. Writes 1/0 into *out_satisfied. */
COLORSAT_API colorsat_status colorsat_formula_evaluate(
    const colorsat_formula* formula, const signed char* values, size_t len,
    int* out_satisfied);
/* Index of the first clause with no true literal, -1 when satisfied. */
COLORSAT_API colorsat_status colorsat_formula_first_unsatisfied(
    const colorsat_formula* formula, const signed char* values, size_t len,
    int* out_clause);

/* -- solving ------------------------------------------------------------ */

COLORSAT_API void colorsat_solve_options_default(colorsat_solve_options* out);

/* Requires a formula in the relaxed class (once negated, at most three
 * positive occurrences per variable): COLORSAT_ERR_CLASS otherwise.
 * COLORSAT_UNSAT is only possible for relaxed inputs and leaves *out NULL. */
COLORSAT_API colorsat_status colorsat_solve(const colorsat_formula* formula,
                                            const colorsat_solve_options* options,
                                            colorsat_solution** out);

/* Exhaustive ground truth over one-false-per-color selections. color_cap 0
 * means the default cap (18 colors). COLORSAT_UNSAT leaves *out NULL. */
COLORSAT_API colorsat_status colorsat_oracle_enumerate(
    const colorsat_formula* formula, int color_cap, colorsat_solution** out);

COLORSAT_API void colorsat_solution_free(colorsat_solution* solution);
/* 1 / 0 for the variable's truth value, -1 when out of range. */
COLORSAT_API int colorsat_solution_value(const colorsat_solution* solution,
                                         int var);
COLORSAT_API int colorsat_solution_var_count(
    const colorsat_solution* solution);
COLORSAT_API colorsat_status colorsat_solution_stats(
    const colorsat_solution* solution, colorsat_solve_stats* out);
/* Graphviz rendering of the final structure behind the assignment. */
COLORSAT_API colorsat_status colorsat_solution_dot(
    const colorsat_solution* solution, char** out);

/* -- instance generation ------------------------------------------------ */

/* n must be a positive multiple of 3; deterministic in the seed. */
COLORSAT_API colorsat_status colorsat_generate_strict(int n, uint64_t seed,
                                                      colorsat_formula** out);
COLORSAT_API colorsat_status colorsat_generate_relaxed(int n, int k_max,
                                                       uint64_t seed,
                                                       colorsat_formula** out);

#ifdef __cplusplus
}
#endif

#endif /* COLORSAT_H */
