/* C interface to the bicm library: opaque complex handles, integer status
 * codes, and heap-allocated result strings.
 *
 * Status codes: 0 success, 1 invalid input, 2 guard exceeded.
 * Every char** result is allocated by the library and must be released
 * with bicm_string_free; the last failure message is available through
 * bicm_last_error.
 */
#ifndef BICM_C_H
#define BICM_C_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define BICM_OK 0
#define BICM_ERR_INVALID 1
#define BICM_ERR_GUARD 2

typedef struct bicm_complex bicm_complex;

const char* bicm_last_error(void);

/* Override the default problem-size guards; any value <= 0 keeps the
 * current setting. */
void bicm_set_guards(int iso_n, long face_count, int shelling_facets,
                     int enum_n);
void bicm_string_free(char* s);
void bicm_complex_free(bicm_complex* dl);

/* ComplexFile text format (header "n <int>", one facet per line). */
int bicm_complex_parse(const char* text, bicm_complex** out);
int bicm_complex_serialize(const bicm_complex* dl, char** out);

int bicm_complex_dual(const bicm_complex* dl, bicm_complex** out);

/* Generators. identify describes merge groups as
 * "row,col+row,col;row,col+row,col"; empty or NULL means no identification. */
int bicm_generate_skeleton(int s, int c, bicm_complex** out);
int bicm_generate_tree(int d, int n, uint64_t seed, bicm_complex** out);
int bicm_generate_pathmatrix(int p, int q, const char* identify, int which_y,
                             bicm_complex** out);
int bicm_generate_rp2(bicm_complex** out);
int bicm_generate_noncone(int n, int c, int s, bicm_complex** out);

/* Reports (JSON documents, schema "bicm-report/1").
 * characteristics is a comma-separated list such as "0,2,3,5". */
int bicm_analyze_json(const bicm_complex* dl, const char* characteristics,
                      int k_max, char** out);
int bicm_betti_json(const bicm_complex* dl, int characteristic, char** out);
int bicm_hilbert_json(const bicm_complex* dl, int k_max, char** out);

/* order: comma-separated 1-based facet positions; result 1/0. */
int bicm_shelling_check(const bicm_complex* dl, const char* order, int* out);
/* On success *out is a comma-separated 1-based order, or NULL when no
 * shelling exists. */
int bicm_shelling_search(const bicm_complex* dl, char** out);

/* cells: "row,col row,col ..." inside the p x q grid. */
int bicm_dichotomy_json(int p, int q, const char* cells, char** out);

/* samples = 0 requests exhaustive mode. */
int bicm_search_json(int n, int c, int s, long long samples, uint64_t seed,
                     char** out);

#ifdef __cplusplus
}
#endif

#endif /* BICM_C_H */
