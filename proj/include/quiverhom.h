/* quiverhom.h -- C API of the quiverhom shared library.
 *
 * Exact path-algebra computations over quivers: representation parsing,
 * Ext^1 dimensions, projectivity tests, closures, Euler forms, the
 * forced-coset checks and the ladder-system scenario runs.
 *
 * Conventions:
 *   - every function returns a qh_status; QH_OK means success;
 *   - handles are opaque and freed with the matching qh_*_free;
 *   - strings returned through char** are owned by the caller and freed
 *     with qh_string_free;
 *   - field_prime selects the scalar field: 0 for the rationals, a prime
 *     p <= 2^31 for the integers mod p;
 *   - qh_last_error() describes the most recent failure in this thread.
 */
#ifndef QUIVERHOM_H
#define QUIVERHOM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qh_status {
  QH_OK = 0,
  QH_ERR_PARSE = 1,   /* malformed text input */
  QH_ERR_DOMAIN = 2,  /* argument outside the operation's domain */
  QH_ERR_BOUNDS = 3,  /* missing or insufficient truncation bound */
  QH_ERR_ARG = 4,     /* null pointer or bad flag */
  QH_ERR_INTERNAL = 5
} qh_status;

typedef struct qh_quiver qh_quiver;
typedef struct qh_rep qh_rep;
typedef struct qh_scenario qh_scenario;

const char* qh_status_str(qh_status status);
const char* qh_last_error(void);
void qh_string_free(char* s);

/* ---- quivers ---- */

qh_status qh_quiver_parse(const char* text, qh_quiver** out);
void qh_quiver_free(qh_quiver* q);
qh_status qh_quiver_serialize(const qh_quiver* q, char** out);
qh_status qh_quiver_is_acyclic(const qh_quiver* q, int* out);

/* Closed subquiver generated by the named seed vertices. */
qh_status qh_quiver_closure(const qh_quiver* q, const char* const* seed_names,
                            size_t n_seeds, qh_quiver** out);

/* All paths ending at the named vertex with length <= max_len, one per
 * line. A negative max_len asks for the unbounded set (finite quivers
 * with an acyclic co-reachable part only). */
qh_status qh_paths_into(const qh_quiver* q, const char* vertex, long max_len, char** out);

/* ---- representations ---- */

qh_status qh_rep_parse(const qh_quiver* q, const char* text, uint32_t field_prime,
                       qh_rep** out);
void qh_rep_free(qh_rep* r);
qh_status qh_rep_serialize(const qh_rep* r, char** out);

/* Restriction of the representation to the closure of the named seeds;
 * the result lives over that closed subquiver. */
qh_status qh_rep_restrict(const qh_rep* r, const char* const* seed_names, size_t n_seeds,
                          qh_rep** rep_out, qh_quiver** sub_out);

/* ---- homological checks ---- */

qh_status qh_hom_dim(const qh_rep* x, const qh_rep* y, uint64_t* out);
qh_status qh_ext1_dim(const qh_rep* x, const qh_rep* y, uint64_t* out);
qh_status qh_ext1_against_algebra(const qh_rep* x, uint64_t* out);
qh_status qh_is_projective(const qh_rep* x, int* out);
qh_status qh_check_cor13(const qh_rep* x, int* ext_vanishes, int* structural);

/* <d, e> over the quiver; the vectors follow the quiver's sorted vertex
 * order and must have exactly as many entries as there are vertices. */
qh_status qh_euler_form(const qh_quiver* q, const int64_t* d, size_t d_len,
                        const int64_t* e, size_t e_len, int64_t* out);

/* Forced-coset checks for N = 0..n_top; the report has one line per N. */
qh_status qh_prop16(uint32_t n_top, uint32_t field_prime, int json, char** report,
                    int* all_ok);

/* ---- ladder-system scenarios ---- */

qh_status qh_scenario_parse(const char* text, qh_scenario** out);
void qh_scenario_free(qh_scenario* sc);
qh_status qh_scenario_verify_phi(const qh_scenario* sc, uint32_t field_prime, int json,
                                 char** report, int* all_ok);
qh_status qh_scenario_uniformize(const qh_scenario* sc, uint32_t field_prime, int json,
                                 char** report, int* all_ok);

/* ---- corpus runs ---- */

/* quiver_name is one of a2, a3, a3alt, a4, d4. The report is
 * byte-deterministic for fixed arguments. */
qh_status qh_corpus_run(const char* quiver_name, uint32_t field_prime,
                        uint32_t random_count, uint32_t dim_max, uint32_t euler_pairs,
                        int json, char** report, int* all_ok);

#ifdef __cplusplus
}
#endif

#endif /* QUIVERHOM_H */
