#ifndef CMLG_CMLG_H
#define CMLG_CMLG_H

/* C interface to the canonical LG model library. Strings returned through
 * char** out-parameters are heap allocated and must be released with
 * cmlg_string_free. On error the message of the failing call is available
 * from cmlg_last_error (per thread, valid until the next call). */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cmlg_status {
    CMLG_OK = 0,
    CMLG_ERR_ARGUMENT = 1,  /* null pointer, unknown format, bad index */
    CMLG_ERR_DATUM = 2,     /* not a cominuscule datum */
    CMLG_ERR_INTERNAL = 3,  /* an internal consistency check failed */
    CMLG_ERR_IO = 4,        /* unreadable or malformed golden file */
} cmlg_status;

enum {
    CMLG_VERIFY_ORACLE = 1u << 0,
    CMLG_VERIFY_QUANTUM_DERIVATION = 1u << 1,
};

typedef struct cmlg_model cmlg_model;

/* family is one of "A", "B", "C", "D", "E6", "E7"; node is 1-based. */
cmlg_status cmlg_model_create(const char* family, int rank, int node, cmlg_model** out);
void cmlg_model_destroy(cmlg_model* model);

/* e.g. "E7/7" */
const char* cmlg_model_name(const cmlg_model* model);
int cmlg_model_poset_size(const cmlg_model* model);

/* Runs the torus-level checks; the report is kept on the handle and
 * included in later "json"/"text" documents. *all_pass may be NULL. */
cmlg_status cmlg_model_verify(cmlg_model* model, unsigned flags, int* all_pass);
/* One JSON object per check, as an array. */
cmlg_status cmlg_model_checks(const cmlg_model* model, char** out);

/* format: "json", "text" or "latex". */
cmlg_status cmlg_model_document(const cmlg_model* model, const char* format, char** out);

/* istar < 0 dumps the minuscule poset, otherwise the move poset of istar.
 * format: "json", "text" or "dot". */
cmlg_status cmlg_model_poset(const cmlg_model* model, int istar, const char* format, char** out);

/* Structural comparison with a golden file. *matches may be NULL; *out
 * receives a JSON report listing missing and extra monomials. */
cmlg_status cmlg_golden_compare(const char* path, int* matches, char** out);

/* JSON array of {family, rank, node} for the verification sweep. */
cmlg_status cmlg_sweep(int max_rank, char** out);

const char* cmlg_last_error(void);
void cmlg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
