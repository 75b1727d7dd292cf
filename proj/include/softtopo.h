#ifndef SOFTTOPO_H
#define SOFTTOPO_H

/*
 * C interface to the softtopo library: finite soft topological spaces,
 * set and function classifiers, and the bounded-exhaustive statement
 * checker, behind opaque handles.
 *
 * Conventions:
 *   - Every function returns a softtopo_status. On any status other than
 *     SOFTTOPO_OK, *error (when the parameter is present) receives a
 *     malloc'd message the caller releases with softtopo_string_free.
 *   - Report strings are malloc'd UTF-8 documents, released the same way.
 *   - format is "text" or "machine" (a single JSON document).
 *   - Handles are immutable after creation and safe to share across
 *     threads; release them with the matching _free call.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum softtopo_status {
  SOFTTOPO_OK = 0,
  SOFTTOPO_FAIL = 1,        /* counterexample found / assertion failed */
  SOFTTOPO_INPUT_ERROR = 2, /* malformed document, unknown label, bad budget */
  SOFTTOPO_INTERNAL_ERROR = 3
} softtopo_status;

typedef struct softtopo_space softtopo_space;
typedef struct softtopo_function softtopo_function;

typedef struct softtopo_budget {
  int max_cells;        /* exhaustive through 4 cells, sampled above */
  int sample_count;     /* sampled candidates per shape beyond the exhaustive range */
  uint64_t seed;        /* drives sampling; reports are byte-stable per seed */
  int jobs;             /* worker threads; results are identical for any value */
  uint64_t max_checks;  /* per-statement cap; 0 means the default of 10^7 */
  int strict_separation; /* nonzero: separation axioms quantify all soft-point pairs */
} softtopo_budget;

const char* softtopo_version(void);
void softtopo_string_free(char* s);

/* --- spaces --------------------------------------------------------------- */

softtopo_status softtopo_space_parse(const char* json_text, const char* origin,
                                     softtopo_space** out, char** error);
softtopo_status softtopo_space_load(const char* path, softtopo_space** out, char** error);
void softtopo_space_free(softtopo_space* space);

softtopo_status softtopo_space_serialize(const softtopo_space* space, char** json_out,
                                         char** error);

/* Axiom verdict plus space properties. *ok_out is 1 when the document's
 * opens (with the implicit null and absolute sets) form a soft topology. */
softtopo_status softtopo_space_validate(const softtopo_space* space, int strict_separation,
                                        const char* format, char** report_out, int* ok_out,
                                        char** error);

/* Classification vector of the named set; carrier_name may be NULL for the
 * whole space, or name a set to classify relative to that subspace. */
softtopo_status softtopo_space_classify_set(const softtopo_space* space,
                                            const char* set_name, const char* carrier_name,
                                            const char* format, char** report_out,
                                            char** error);

/* --- functions ------------------------------------------------------------ */

softtopo_status softtopo_function_parse(const char* json_text, const char* origin,
                                        const char* base_dir, softtopo_function** out,
                                        char** error);
softtopo_status softtopo_function_load(const char* path, softtopo_function** out,
                                       char** error);
void softtopo_function_free(softtopo_function* fn);

softtopo_status softtopo_function_classify(const softtopo_function* fn, const char* format,
                                           char** report_out, char** error);

/* --- checker ---------------------------------------------------------------*/

/* Exact number of soft topologies over the given cell count (exhaustive
 * range only). */
softtopo_status softtopo_enumerate_count(int cells, uint64_t* count_out, char** error);
softtopo_status softtopo_enumerate_report(int cells, const char* format, char** report_out,
                                          char** error);

/* Runs catalog statements. ids_csv is a comma-separated id list; NULL or ""
 * selects every proved statement (softtopo_check), every strictness search
 * (softtopo_search), or the full catalog (softtopo_report). *ok_out is 0
 * when a proved statement produced a counterexample. */
softtopo_status softtopo_check(const char* ids_csv, const softtopo_budget* budget,
                               const char* format, char** report_out, int* ok_out,
                               char** error);
softtopo_status softtopo_search(const char* ids_csv, const softtopo_budget* budget,
                                const char* format, char** report_out, int* ok_out,
                                char** error);
softtopo_status softtopo_report(const softtopo_budget* budget, const char* format,
                                char** report_out, int* ok_out, char** error);

/* Built-in worked examples with pinned verdicts; *ok_out is 1 when every
 * assertion holds. */
softtopo_status softtopo_demo(const char* format, char** report_out, int* ok_out,
                              char** error);

#ifdef __cplusplus
}
#endif

#endif /* SOFTTOPO_H */
