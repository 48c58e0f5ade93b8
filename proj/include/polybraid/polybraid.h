/* C interface to the polybraid library.
 *
 * Objects are opaque handles created by pb_*_create/parse functions and
 * released with the matching pb_*_free. Every function returns a pb_status;
 * negative values are errors whose message is available from pb_last_error()
 * on the calling thread. Strings handed out through char** parameters are
 * heap allocated and must be released with pb_string_free.
 */
#ifndef POLYBRAID_H
#define POLYBRAID_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(POLYBRAID_BUILDING)
#define PB_API __declspec(dllexport)
#else
#define PB_API __declspec(dllimport)
#endif
#else
#define PB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pb_status {
  PB_OK = 0,
  PB_FALSE = 1,        /* predicate false or violations found */
  PB_INCONCLUSIVE = 2, /* bounded search gave up or enumeration overflowed */
  PB_ERR_ARGUMENT = -1,
  PB_ERR_PARSE = -2,
  PB_ERR_LIMIT = -3,
  PB_ERR_MISMATCH = -4, /* mode, arity or shape mismatch */
  PB_ERR_INTERNAL = -5
} pb_status;

typedef struct pb_presentation pb_presentation;
typedef struct pb_matrix pb_matrix;
typedef struct pb_table pb_table;

PB_API const char* pb_last_error(void);
PB_API const char* pb_status_name(pb_status status);
PB_API void pb_string_free(char* s);

/* Presentations. pb_presentation_braid uses the classical braid group for k = 3. */
PB_API pb_status pb_presentation_braid(int n, int k, pb_presentation** out);
PB_API pb_status pb_presentation_symmetric(int n, int k, pb_presentation** out);
PB_API pb_status pb_presentation_coxeter(int n, int k, pb_presentation** out);
PB_API pb_status pb_presentation_parse(const char* text, pb_presentation** out);
PB_API void pb_presentation_free(pb_presentation* p);
PB_API int pb_presentation_generators(const pb_presentation* p);
PB_API size_t pb_presentation_chain_count(const pb_presentation* p);
/* format: "plain" or "json"; alphabet: "s", "sigma", "r", "g" or "letters". */
PB_API pb_status pb_presentation_export(const pb_presentation* p, const char* format,
                                        const char* alphabet, char** out);

/* Regularity equations read off from the polyadic power of the generic matrix. */
PB_API pb_status pb_regularity_schema(int k, int ell, const char* alphabet, char** out);

/* Polyadic matrices. entries is a comma separated list of k-1 words in either
 * indexed (s1 s2^-1) or letter (ab^-1) syntax; formatting reuses that syntax. */
PB_API pb_status pb_matrix_create(int k, const char* entries, pb_matrix** out);
PB_API void pb_matrix_free(pb_matrix* m);
PB_API pb_status pb_matrix_polyadic_power(const pb_matrix* m, int ell, pb_matrix** out);
PB_API pb_status pb_matrix_querelement(const pb_matrix* m, pb_matrix** out);
/* PB_OK when mu_k with q in every position returns m, PB_FALSE otherwise. */
PB_API pb_status pb_matrix_check_querelement(const pb_matrix* m, const pb_matrix* q);
PB_API pb_status pb_matrix_format(const pb_matrix* m, char** out);

/* PB_OK when the matrix equations reproduce the higher braid chains. */
PB_API pb_status pb_verify_correspondence(int n, int k, char** report);

/* Finite semigroups given by Cayley tables. */
PB_API pb_status pb_table_parse(const char* text, pb_table** out);
PB_API void pb_table_free(pb_table* t);
PB_API int pb_table_order(const pb_table* t);
PB_API pb_status pb_table_regular_tuples(const pb_table* t, int k, int ell, char** out);
/* PB_OK when the idempotent matrices are closed, PB_FALSE when violations exist. */
PB_API pb_status pb_table_closure(const pb_table* t, int k, unsigned threads, int allow_sampling,
                                  char** out);

/* PB_OK equal (with trace), PB_FALSE distinct in the abelian quotient,
 * PB_INCONCLUSIVE when neither test decides. */
PB_API pb_status pb_word_equal(const pb_presentation* p, const char* a, const char* b,
                               size_t max_len, size_t max_states, char** out);
PB_API pb_status pb_abelianize(const pb_presentation* p, char** out);
/* PB_OK with the order when the table closes, PB_INCONCLUSIVE on overflow. */
PB_API pb_status pb_enumerate_cosets(const pb_presentation* p, size_t max_cosets, char** out);
/* images_text: `degree d` then one permutation per generator. */
PB_API pb_status pb_check_homomorphism(const pb_presentation* p, const char* images_text,
                                       char** out);

#ifdef __cplusplus
}
#endif

#endif /* POLYBRAID_H */
