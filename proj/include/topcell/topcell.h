/*
 * topcell — C API for the motivic splitting verification engine.
 *
 * All structured inputs and outputs are JSON strings (schemas documented in
 * the project README). Calls return tc_status; on TC_OK the out-parameter
 * holds a report handle owning both a machine-readable JSON rendering and a
 * human-readable text rendering, plus the CLI exit code the verdict maps to
 * (0 pass/splits, 1 definite failure/obstruction, 2 input error,
 * 3 undecided). Handles must be released with the matching _free call.
 * On any other status, tc_last_error() describes the failure (thread-local).
 */
#ifndef TOPCELL_TOPCELL_H
#define TOPCELL_TOPCELL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
    TC_OK = 0,
    TC_ERR_INVALID_ARGUMENT = 1,
    TC_ERR_PARSE = 2,
    TC_ERR_DOMAIN = 3, /* contract violation inside the engine (bad ring, ill-defined map, ...) */
    TC_ERR_INTERNAL = 4
} tc_status;

typedef struct tc_report tc_report;
typedef struct tc_diagram tc_diagram;

const char* tc_version(void);
const char* tc_status_name(tc_status status);
/* Message for the most recent failing call on this thread. */
const char* tc_last_error(void);

/* --- reports ------------------------------------------------------- */

const char* tc_report_json(const tc_report* report);
const char* tc_report_text(const tc_report* report);
int tc_report_exit_code(const tc_report* report);
void tc_report_free(tc_report* report);

/* --- verification commands ----------------------------------------- */

/* Thom-class eigen identities and the closed-form table for ranks
 * 1..rank_max (1 <= rank_max <= 6); prime is 2, 3, or 0 for both. */
tc_status tc_verify_lemma(int rank_max, int prime, tc_report** out);

/* Splitting verdict for a surface/curve descriptor (JSON). */
tc_status tc_check_surface(const char* descriptor_json, tc_report** out);
tc_status tc_check_curve(const char* descriptor_json, tc_report** out);

/* Verdicts for every entry of a catalog; NULL uses the built-in catalog. */
tc_status tc_catalog(const char* catalog_json, tc_report** out);

/* Smith normal form of an integer matrix (JSON rows). */
tc_status tc_snf(const char* matrix_json, tc_report** out);

/* Projector verification: NULL instance runs the built-in curve presets
 * for genus 0..genus_max plus the abelian-surface check; otherwise the
 * instance JSON supplies a realization, projectors and delta. */
tc_status tc_projectors(const char* instance_json, int genus_max, tc_report** out);

/* --- diagrams and lifting ------------------------------------------ */

tc_status tc_diagram_parse(const char* diagram_json, tc_diagram** out);
void tc_diagram_free(tc_diagram* diagram);

/* Commutativity/exactness assertions of the parsed diagram. */
tc_status tc_diagram_check(const tc_diagram* diagram, tc_report** out);

/* Lifting decision for a cycle (JSON integer array). twist_json is an
 * optional coordinate vector for the twisted criterion; psi = 1 also runs
 * the secondary obstruction when the diagram carries the needed arrows. */
tc_status tc_diagram_lift(const tc_diagram* diagram, const char* cycle_json,
                          const char* twist_json, int psi, tc_report** out);

#ifdef __cplusplus
}
#endif

#endif /* TOPCELL_TOPCELL_H */
