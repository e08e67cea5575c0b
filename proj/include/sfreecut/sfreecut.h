/*
 * sfreecut C API.
 *
 * Exact construction of maximal S-free convex polyhedra (S = integer points
 * of a rational polyhedron) and of the minimal cut coefficients they induce,
 * with brute-force validity auditing. All documents cross the boundary as
 * JSON text in the library's canonical format; handles are opaque.
 *
 * Thread safety: handles are immutable after creation and may be shared
 * across threads. Error messages are thread-local.
 */

#ifndef SFREECUT_H
#define SFREECUT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sfc_instance sfc_instance; /* n, S, f, optional rays + box */
typedef struct sfc_body sfc_body;         /* {x : a_i (x - f) <= 1} or a half-space */

typedef enum sfc_status {
    SFC_OK = 0,
    SFC_ERROR_PARSE = 1,     /* malformed document (message carries position) */
    SFC_ERROR_INVALID = 2,   /* precondition violated / inconsistent inputs */
    SFC_ERROR_UNBOUNDED = 3, /* enumeration over an unbounded region without a box */
    SFC_ERROR_INTERNAL = 4
} sfc_status;

const char* sfc_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* sfc_last_error(void);

/* Frees any string returned through a char** out parameter. */
void sfc_string_free(char* s);

sfc_status sfc_instance_parse(const char* text, sfc_instance** out);
sfc_status sfc_body_parse(const char* text, sfc_body** out);
void sfc_instance_free(sfc_instance* inst);
void sfc_body_free(sfc_body* body);

/* Canonical re-emission (sorted keys, lowest-term rationals). */
sfc_status sfc_instance_emit(const sfc_instance* inst, char** out_text);
sfc_status sfc_body_emit(const sfc_body* body, char** out_text);

/*
 * Operations. `box` is an optional override, "x1lo x1hi x2lo x2hi ..." with
 * rational entries; pass NULL to use the instance box (or the documented
 * default). Reports are JSON; *out_negative is set to 1 when the verdict is
 * negative (not S-free, not maximal, cut invalid), else 0.
 */

/* S-freeness plus the maximality report for a body. */
sfc_status sfc_check(const sfc_body* body, const sfc_instance* inst, const char* box,
                     char** out_report, int* out_negative);

/* Facet tilting to a maximal S-free body; emits the body file and a report
 * (with the tilting trace when want_trace != 0). */
sfc_status sfc_maximalize(const sfc_body* body, const sfc_instance* inst, const char* box,
                          int want_trace, char** out_body_text, char** out_report,
                          int* out_negative);

/* Cut generation: tilt the initial body (NULL = coordinate split) and
 * evaluate the gauge at the instance rays. */
sfc_status sfc_cut(const sfc_instance* inst, const sfc_body* initial, const char* box,
                   char** out_report, int* out_negative);

/* Brute-force validity audit of the body's gauge over the instance. */
sfc_status sfc_verify(const sfc_instance* inst, const sfc_body* gauge, const char* box,
                      char** out_report, int* out_negative);

/* Polar generators conv{0, a_1, ..., a_t} of the body's row cone. */
sfc_status sfc_polar(const sfc_body* body, char** out_report);

/* Companion lattice-free set: body intersected with the shell of S, shell
 * facets dropped or pushed onto integer points. */
sfc_status sfc_tighten(const sfc_body* body, const sfc_instance* inst, const char* box,
                       char** out_report, int* out_negative);

/* Deterministic SVG of the scene (S, bodies, lattice points, f). */
sfc_status sfc_plot(const sfc_instance* inst, const sfc_body* const* bodies, size_t n_bodies,
                    const char* box, char** out_svg);

#ifdef __cplusplus
}
#endif

#endif /* SFREECUT_H */
