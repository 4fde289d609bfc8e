/* C API for the condmodel engine.
 *
 * All handles are opaque; all composite inputs and outputs are JSON strings
 * (schema "condmodel/1"). Strings returned through char** out parameters are
 * owned by the caller and must be released with cm_string_free. On any
 * failure the function returns a nonzero status and cm_last_error() gives a
 * thread-local message.
 */
#ifndef CONDMODEL_H
#define CONDMODEL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cm_space cm_space;

typedef enum cm_status {
  CM_OK = 0,
  CM_ERR_INVALID_ARG = 1,
  CM_ERR_SYNTAX = 2,     /* formula or expression parse error */
  CM_ERR_CONFIG = 3,     /* malformed space/assignment/bounds input */
  CM_ERR_SCENARIO = 4,   /* malformed scenario table */
  CM_ERR_EVAL = 5,       /* evaluation-time error (unbound variable, ...) */
  CM_ERR_INTERNAL = 6
} cm_status;

/* Thread-local message for the most recent failure in this thread. */
const char* cm_last_error(void);

void cm_string_free(char* s);

/* Space lifecycle. weights_json: {"weights":["1/2","1/2"]}. */
cm_status cm_space_create(const char* weights_json, cm_space** out_space);
void cm_space_destroy(cm_space* space);
size_t cm_space_atom_count(const cm_space* space);

/* Evaluates one formula. assignment_json may be NULL or a JSON object
 * {"num":{...},"set":{...}}. Output: a TruthReport JSON object with the
 * event, its measure and witness traces. */
cm_status cm_eval_formula(const cm_space* space, const char* formula,
                          const char* assignment_json, uint32_t num_bound,
                          uint32_t set_bound, char** out_report_json);

/* Evaluates a formula file (one formula per line, '#' comments). Output: a
 * JSON array of TruthReports. */
cm_status cm_eval_file(const cm_space* space, const char* file_text,
                       const char* assignment_json, uint32_t num_bound,
                       uint32_t set_bound, char** out_reports_json);

/* ACA0 axiom suite over sampled assignments. */
cm_status cm_suite_axioms(const cm_space* space, uint32_t num_bound, uint32_t set_bound,
                          uint64_t trials, uint64_t seed, char** out_report_json);

/* Randomized sequent-rule correctness suite across all rules. */
cm_status cm_suite_rules(const cm_space* space, uint32_t num_bound, uint32_t set_bound,
                         uint64_t trials, uint64_t seed, char** out_report_json);

/* Exhaustive Boolean-algebra law check over the space's events. */
cm_status cm_suite_boolean_laws(const cm_space* space, char** out_report_json);

/* Grid-exact scenario minimization; the scenario JSON carries its own
 * space. Output: per-atom minimizers and values. */
cm_status cm_argmin(const char* scenario_json, char** out_selection_json);

/* Bolzano-Weierstrass extraction on expression-defined sequences. */
cm_status cm_bw(const char* request_json, char** out_report_json);

#ifdef __cplusplus
}
#endif

#endif /* CONDMODEL_H */
