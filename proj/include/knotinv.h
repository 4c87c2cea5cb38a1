/* knotinv: Alexander polynomial, Blanchfield presentation and Arf invariant
 * of knots, exposed as a plain C interface.
 *
 * Every function returns a kn_status. Strings handed out through char**
 * parameters are JSON documents owned by the caller; release them with
 * kn_string_free. After a failure kn_last_error() describes it (per thread).
 */
#ifndef KNOTINV_H
#define KNOTINV_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define KN_API __declspec(dllexport)
#else
#define KN_API __attribute__((visibility("default")))
#endif

typedef enum kn_status {
    KN_OK = 0,
    KN_ERR_PARSE = 1,
    KN_ERR_VALIDATION = 2,
    KN_ERR_DOMAIN = 3,
    KN_ERR_SHAPE = 4,
    KN_ERR_DIVISION_BY_ZERO = 5,
    KN_ERR_UNKNOWN_CROSSING = 6,
    KN_ERR_UNKNOWN_ARC = 7,
    KN_ERR_FRAMING = 8,
    KN_ERR_SINGULAR = 9,
    KN_ERR_CERTIFICATION = 10,
    KN_ERR_SCHEMA = 11,
    KN_ERR_INTERNAL = 12,
    KN_ERR_ARGUMENT = 13
} kn_status;

typedef struct kn_diagram kn_diagram;
typedef struct kn_tower kn_tower;
typedef struct kn_matrix kn_matrix;

KN_API const char* kn_version(void);
KN_API const char* kn_status_name(kn_status s);
KN_API const char* kn_last_error(void);
KN_API void kn_string_free(char* s);

/* Diagrams. */
KN_API kn_status kn_diagram_from_pd(const char* text, kn_diagram** out);
KN_API kn_status kn_diagram_from_gauss(const char* text, kn_diagram** out);
KN_API void kn_diagram_free(kn_diagram* d);
KN_API kn_status kn_diagram_crossings(const kn_diagram* d, size_t* out);
KN_API kn_status kn_diagram_writhe(const kn_diagram* d, int* out);
/* {"crossings": [...], "gauss": ..., "pd": ..., "writhe": ...} */
KN_API kn_status kn_diagram_json(const kn_diagram* d, char** out_json);

/* Fox-calculus oracle: {"delta", "delta_text", "arf", "generators", "relators"}. */
KN_API kn_status kn_oracle(const kn_diagram* d, char** out_json);

/* Full pipeline. options_json may be NULL or an object with any of
 * "marked" (array of crossing ids), "auto_unknot" ("descending"|"minimal"),
 * "r3_budget", "size_budget", "seed". The report carries delta, arf, psi,
 * lambda, epsilon, tau, seed and a "verdicts" object. */
KN_API kn_status kn_compute(const kn_diagram* d, const char* options_json, char** out_json);

/* Runs the pipeline for seeds first_seed .. first_seed + trials - 1 and
 * compares each determinant with the oracle. *all_equal is 1 iff every trial
 * agrees up to units. */
KN_API kn_status kn_compare(const kn_diagram* d, const char* options_json, unsigned trials,
                            uint64_t first_seed, char** out_json, int* all_equal);

/* Tower data (see README for the schema) and Omega. */
KN_API kn_status kn_tower_from_json(const char* text, kn_tower** out);
KN_API void kn_tower_free(kn_tower* t);
/* {"omega", "det", "det_text", "arf_levine", "arf_tower", "consistent"} */
KN_API kn_status kn_omega(const kn_tower* t, char** out_json);

/* Presentation matrices: {"rows", "cols", "entries"} with polynomials as
 * exponent-keyed objects. */
KN_API kn_status kn_matrix_from_json(const char* text, kn_matrix** out);
KN_API void kn_matrix_free(kn_matrix* m);
/* {"num": poly, "den": poly, "integral": bool} */
KN_API kn_status kn_pairing(const kn_matrix* m, size_t i, size_t j, char** out_json);
KN_API kn_status kn_check_form(const kn_matrix* m, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
