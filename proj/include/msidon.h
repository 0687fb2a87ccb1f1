/* msidon: finite-field towers, Sidon-space families and their verification,
 * linear-set analysis, and multi-orbit cyclic subspace codes with an
 * operator-channel simulator.
 *
 * All structured inputs and outputs are JSON strings; the formats are
 * documented in the project README. Strings returned through `char**` out
 * parameters are heap-allocated and must be released with msd_string_free.
 */

#ifndef MSIDON_H_
#define MSIDON_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define MSD_VERSION "0.1.0"

typedef enum {
  MSD_OK = 0,
  MSD_ERR_INVALID = 1,  /* invalid argument or parameter set */
  MSD_ERR_PARSE = 2,    /* malformed spec string or JSON */
  MSD_ERR_CAP = 3,      /* enumeration cap exceeded */
  MSD_ERR_INTERNAL = 4, /* broken internal invariant */
} msd_status;

/* Exported types (opaque) */

typedef struct msd_field msd_field;   /* a finite field with a base subfield */
typedef struct msd_family msd_family; /* an ordered list of subspaces */
typedef struct msd_code msd_code;     /* a multi-orbit cyclic subspace code */

const char* msd_version(void);

/* Message for the last failing msd_* call on this thread; valid until the
 * next call. */
const char* msd_last_error(void);

void msd_string_free(char* s);

/* Fields.  spec: "gf(p^m;c0,c1,...,1)", ascending modulus coefficients.
 * base_q selects the base subfield F_q (0 means the prime field). */
msd_status msd_field_create(const char* spec, uint64_t base_q, msd_field** out);
/* modulus_csv may be NULL for the deterministic default modulus */
msd_status msd_field_make(uint64_t p, uint32_t m, const char* modulus_csv, uint64_t base_q,
                          msd_field** out);
msd_status msd_field_describe(const msd_field* f, char** json_out);
void msd_field_free(msd_field* f);

/* Families */
msd_status msd_family_from_json(const char* json, msd_family** out);
msd_status msd_family_to_json(const msd_family* f, char** json_out);
void msd_family_free(msd_family* f);

/* Constructions.  Params JSON:
 *   monomial: {"q","t","s","r","mus"?,"xi"?,"append_subfield"?}
 *   orbit-code: {"q","t","s","w"?,"b"?,"append_subfield"?}
 * The emitted family JSON embeds the resolved construction parameters. */
msd_status msd_construct_monomial(const char* params_json, msd_family** out);
msd_status msd_construct_orbit_code(const char* params_json, msd_family** out);

/* Verification.  Options JSON:
 *   {"check": "multi-sidon"|"sidon"|"weak"|"span-class"|"poly-criterion"
 *             |"canonical-form",
 *    "route": "orbit-intersection"|"definitional",   (sidon only)
 *    "index": i,                                     (sidon only, default 0)
 *    "emit_witness": bool, "threads": n} */
msd_status msd_verify(const msd_family* f, const char* options_json, char** report_out);

/* Linear-set analysis.  Options JSON:
 *   {"heavy": bool, "hyperplane": bool, "sidon_size": bool, "cap": n} */
msd_status msd_spectrum(const msd_family* f, const char* options_json, char** report_out);

/* Equivalence.  Options JSON:
 *   {"mode": "family"|"monomial"|"code-linear"|"code-semilinear",
 *    "emit_witness": bool}
 * Monomial mode reads construction params embedded in both families. */
msd_status msd_equivalence(const msd_family* a, const msd_family* b, const char* options_json,
                           char** report_out);

/* Projection-map representation of a direct-sum decomposition; the family
 * members are the parts. */
msd_status msd_projection_check(const char* family_json, char** report_out);

/* Codes */
msd_status msd_code_build(const msd_family* f, uint32_t threads, msd_code** out);
msd_status msd_code_from_json(const char* json, msd_code** out);
msd_status msd_code_to_json(const msd_code* c, int with_min_distance, uint32_t threads,
                            char** json_out);
/* {"size", "orbit_sizes", "min_distance"} */
msd_status msd_code_analyze(const msd_code* c, uint32_t threads, char** report_out);
/* Params JSON: {"rho","e","trials","seed","threads"?} */
msd_status msd_code_simulate(const msd_code* c, const char* params_json, char** report_out);
void msd_code_free(msd_code* c);

/* Named property suites.  Options JSON:
 *   {"suite": "kernel-bound"|"three-way"|"projection"|"equivalence-roundtrip"
 *             |"weak-search"|"monomial-grid",
 *    "samples"/"trials": n, "seed": n, "q": n, "n": n, "r": n} */
msd_status msd_run_suite(const char* options_json, char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* MSIDON_H_ */
