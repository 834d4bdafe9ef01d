#ifndef HOMCAS_H
#define HOMCAS_H

/* C interface to libhomcas. Objects are opaque handles owned by the caller
 * and released with the matching *_free function. Strings returned through
 * char** are released with homcas_string_free. Every call that can fail
 * returns a homcas_status; the message of the last failure on the calling
 * thread is available from homcas_last_error. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(HOMCAS_BUILDING_LIBRARY)
#define HOMCAS_API __attribute__((visibility("default")))
#else
#define HOMCAS_API
#endif

typedef enum homcas_status {
  HOMCAS_OK = 0,
  HOMCAS_ERR_NULL_ARGUMENT = 1,
  HOMCAS_ERR_INPUT = 2,
  HOMCAS_ERR_NOT_INVERTIBLE = 3,
  HOMCAS_ERR_NOT_AUTOMORPHISM = 4,
  HOMCAS_ERR_NOT_MORPHISM = 5,
  HOMCAS_ERR_RESOURCE = 6,
  HOMCAS_ERR_DEGREE_OVERFLOW = 7,
  HOMCAS_ERR_CONSTRUCTION = 8,
  HOMCAS_ERR_INTERNAL = 9
} homcas_status;

typedef struct homcas_structure homcas_structure;
typedef struct homcas_report homcas_report;

HOMCAS_API const char* homcas_version(void);
HOMCAS_API const char* homcas_status_name(homcas_status status);
HOMCAS_API const char* homcas_last_error(void);
HOMCAS_API void homcas_string_free(char* text);

/* Structure files */
HOMCAS_API homcas_status homcas_structure_parse(const char* text, homcas_structure** out);
HOMCAS_API homcas_status homcas_structure_read(const char* path, homcas_structure** out);
HOMCAS_API homcas_status homcas_structure_serialize(const homcas_structure* s, char** out);
HOMCAS_API homcas_status homcas_structure_write(const homcas_structure* s, const char* path);
/* "hom_hopf", "group", ...; NULL for a NULL handle. */
HOMCAS_API const char* homcas_structure_kind(const homcas_structure* s);
HOMCAS_API size_t homcas_structure_dim(const homcas_structure* s);
HOMCAS_API void homcas_structure_free(homcas_structure* s);

/* Verification and constructions. Each fills *report when report is not
 * NULL; a construction that cannot be carried out still returns HOMCAS_OK
 * with a failing report and *out set to NULL. */
HOMCAS_API homcas_status homcas_check(const homcas_structure* s, homcas_report** report);
/* Q[C_order] twisted by g -> g^aut_exp, as a hom_bialgebra. */
HOMCAS_API homcas_status homcas_group_algebra(size_t order, long aut_exp, homcas_structure** out);
/* Twists a classical structure (classical_algebra, or any Hom kind with
 * alpha = id) by the matrix in matrix_text. */
HOMCAS_API homcas_status homcas_twist(const homcas_structure* classical, const char* matrix_text,
                                      homcas_structure** out);
HOMCAS_API homcas_status homcas_antipode(const homcas_structure* bialgebra, homcas_structure** out,
                                         homcas_report** report);
HOMCAS_API homcas_status homcas_enveloping(const homcas_structure* lie, size_t max_degree, homcas_report** report);
/* Tree census on `leaves` leaves; with verify_paths != 0 also path independence. */
HOMCAS_API homcas_status homcas_coherence(size_t leaves, int verify_paths, homcas_report** report);
HOMCAS_API homcas_status homcas_hopfmod(const homcas_structure* hopf, const homcas_structure* module,
                                        homcas_report** report);
HOMCAS_API homcas_status homcas_regular_hopf_module(const homcas_structure* hopf, homcas_structure** out);
/* F(N) for N = (Q^d, matrix). */
HOMCAS_API homcas_status homcas_free_hopf_module(const homcas_structure* hopf, const char* matrix_text,
                                                 homcas_structure** out);

/* Reports */
HOMCAS_API int homcas_report_passed(const homcas_report* r);
HOMCAS_API size_t homcas_report_axioms(const homcas_report* r);
HOMCAS_API double homcas_report_elapsed_ms(const homcas_report* r);
HOMCAS_API homcas_status homcas_report_text(const homcas_report* r, char** out);
HOMCAS_API homcas_status homcas_report_jsonl(const homcas_report* r, char** out);
HOMCAS_API void homcas_report_free(homcas_report* r);

#ifdef __cplusplus
}
#endif

#endif
