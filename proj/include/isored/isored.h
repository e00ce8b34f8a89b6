/* C interface to the isospectral reduction library.
 *
 * Networks and matrices are opaque handles created from JSON documents.
 * Every operation returns an isored_status; on success the result is a
 * JSON report written to *report, which the caller releases with
 * isored_string_free. On failure *report is left untouched and
 * isored_last_error() describes the problem (per thread, valid until the
 * next call on that thread).
 *
 * Vertex lists are comma-separated 1-based labels ("1,2,4"); numbers are
 * Gaussian-rational literals ("i", "-1/2+3i").
 */
#ifndef ISORED_ISORED_H
#define ISORED_ISORED_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(ISORED_BUILDING_LIBRARY)
#    define ISORED_API __declspec(dllexport)
#  else
#    define ISORED_API __declspec(dllimport)
#  endif
#else
#  define ISORED_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 1.. mirror isored::ErrorCode. */
typedef enum isored_status {
  ISORED_OK = 0,
  ISORED_INVALID_ARGUMENT = 1,
  ISORED_PARSE_ERROR = 2,
  ISORED_DUPLICATE_EDGE = 3,
  ISORED_BAD_VERTEX_INDEX = 4,
  ISORED_EMPTY_SET = 5,
  ISORED_CYCLE_IN_COMPLEMENT = 6,
  ISORED_LOOP_WEIGHT_IS_LAMBDA = 7,
  ISORED_NOT_LAMBDA0_STRUCTURAL = 8,
  ISORED_LOOP_WEIGHT_EQUALS_LAMBDA0 = 9,
  ISORED_SINGULAR_COMPLEMENT = 10,
  ISORED_SINGULAR_COMPLEMENT_AT_LAMBDA0 = 11,
  ISORED_SINGULAR_BASIS = 12,
  ISORED_DIVISION_BY_ZERO_FUNCTION = 13,
  ISORED_POLE_ERROR = 14,
  ISORED_NEAR_POLE_ERROR = 15,
  ISORED_NOT_AN_EIGENVALUE = 16,
  ISORED_CHAIN_TERMINATED = 17,
  ISORED_ZERO_VECTOR_INPUT = 18,
  ISORED_COMPLEMENT_NOT_SINGLETON = 19,
  ISORED_COMPLEMENT_NOT_DISCONNECTED = 20,
  ISORED_HYPOTHESIS_VIOLATED = 21,
  ISORED_RULE_INAPPLICABLE = 22,
  ISORED_CROSS_VALIDATION_FAILED = 23,
  ISORED_NUMERIC_FAILURE = 24,
  ISORED_INTERNAL = 25
} isored_status;

typedef enum isored_method {
  ISORED_METHOD_GRAPH = 0, /* branch sums */
  ISORED_METHOD_BLOCK = 1, /* elimination over the function field */
  ISORED_METHOD_BOTH = 2   /* both, compared entrywise */
} isored_method;

typedef struct isored_network isored_network;
typedef struct isored_matrix isored_matrix;

ISORED_API const char* isored_version(void);
ISORED_API const char* isored_status_name(isored_status status);
ISORED_API const char* isored_last_error(void);
ISORED_API void isored_string_free(char* s);

ISORED_API isored_status isored_network_parse(const char* json, isored_network** out);
ISORED_API void isored_network_free(isored_network* net);
ISORED_API size_t isored_network_size(const isored_network* net);
ISORED_API isored_status isored_network_to_json(const isored_network* net, char** out);

ISORED_API isored_status isored_matrix_parse(const char* json, isored_matrix** out);
ISORED_API void isored_matrix_free(isored_matrix* m);

/* Structural-set certificate; lambda0 may be NULL. Report key "valid". */
ISORED_API isored_status isored_validate_set(const isored_network* net, const char* keep, const char* lambda0,
                                             char** report);

/* Reduction onto keep, optionally through intermediate sets separated by ';'
 * in via. allow_nonstructural only affects ISORED_METHOD_BLOCK. Report keys
 * "network", "matrix", "char_function" and, for BOTH, "cross_validated". */
ISORED_API isored_status isored_reduce(const isored_network* net, const char* keep, const char* via,
                                       isored_method method, int allow_nonstructural, char** report);

/* Spectrum with multiplicities. With at != NULL, also multiplicities,
 * eigenvectors and (depth > 0) a chain at that value; with at == NULL and
 * depth > 0, chains at every exact eigenvalue. Report key "exact". */
ISORED_API isored_status isored_spectrum(const isored_network* net, const char* at, unsigned depth,
                                         char** report);

/* Preservation verdicts for the chain of length chain_depth at lambda0.
 * all_sets_size == 0 checks keep; otherwise every structural set of that
 * size is checked and keep is ignored. Report key "preserved". */
ISORED_API isored_status isored_check_preserve(const isored_network* net, const char* keep, const char* lambda0,
                                               unsigned chain_depth, size_t all_sets_size, char** report);

/* Full vector from a reduced one. keep may be NULL, in which case the kept
 * set is read from the labels of the reduced network. prev (full length)
 * may be NULL for an eigenvector. */
ISORED_API isored_status isored_reconstruct(const isored_network* original, const isored_network* reduced,
                                            const char* keep, const char* lambda0, const char* vector,
                                            const char* prev, char** report);

/* Rule: "keep:<labels>", "loops" or "min-cycle-cover". Report key
 * "equivalent". */
ISORED_API isored_status isored_equiv(const isored_network* a, const isored_network* b, const char* rule,
                                      size_t max_steps, int allow_zero, char** report);

ISORED_API isored_status isored_equiv_matrix(const isored_matrix* a, const isored_matrix* b, size_t dim,
                                             char** report);

#ifdef __cplusplus
}
#endif

#endif /* ISORED_ISORED_H */
