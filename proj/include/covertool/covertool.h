#ifndef COVERTOOL_COVERTOOL_H
#define COVERTOOL_COVERTOOL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CT_API __declspec(dllexport)
#else
#define CT_API __attribute__((visibility("default")))
#endif

typedef struct ct_graph ct_graph;
typedef struct ct_ideal ct_ideal;
typedef struct ct_graph_list ct_graph_list;

typedef enum ct_status {
  CT_OK = 0,
  CT_ERR_INVALID_ARGUMENT = 1,
  CT_ERR_PARSE = 2,
  CT_ERR_SIZE = 3,
  CT_ERR_OVERFLOW = 4,
  CT_ERR_INTERNAL = 5
} ct_status;

typedef enum ct_verdict {
  CT_VERDICT_PASS = 0,
  CT_VERDICT_FAIL = 1,
  CT_VERDICT_SKIPPED = 2
} ct_verdict;

/* Zero fields take the defaults k = 2, kmax = 3; a NULL vertex checks every
 * vertex (deletion); a NULL field means the rationals ("q"). */
typedef struct ct_verify_params {
  uint32_t k;
  uint32_t kmax;
  const char* vertex;
  const char* field;
} ct_verify_params;

CT_API const char* ct_version(void);
/* Message of the last failed call on this thread; "" if none. */
CT_API const char* ct_last_error(void);
/* Releases strings returned through char** out parameters. */
CT_API void ct_string_free(char* s);

/* Edge list or a single graph6 token. */
CT_API ct_status ct_graph_parse(const char* text, ct_graph** out);
CT_API void ct_graph_free(ct_graph* g);
CT_API size_t ct_graph_order(const ct_graph* g);
CT_API size_t ct_graph_edge_count(const ct_graph* g);
CT_API ct_status ct_graph_canonical(const ct_graph* g, char** out);
CT_API ct_status ct_graph_to_graph6(const ct_graph* g, char** out);
CT_API ct_status ct_graph_to_edge_list(const ct_graph* g, char** out);
/* {graph, vertices, edges:[[u, v], ...]} */
CT_API ct_status ct_graph_to_json(const ct_graph* g, char** out);
/* ct_graph_to_json plus class:{...}, vwc_labeling, cm_labeling. */
CT_API ct_status ct_graph_classify_json(const ct_graph* g, char** out);
CT_API ct_status ct_graph_build_gk(const ct_graph* g, uint32_t r,
                                   ct_graph** out);

CT_API ct_status ct_ideal_cover(const ct_graph* g, ct_ideal** out);
CT_API ct_status ct_ideal_edge(const ct_graph* g, ct_ideal** out);
CT_API ct_status ct_ideal_symbolic_power(const ct_ideal* ideal, uint32_t k,
                                         ct_ideal** out);
CT_API ct_status ct_ideal_polarize(const ct_ideal* ideal, ct_ideal** out);
CT_API void ct_ideal_free(ct_ideal* ideal);
CT_API size_t ct_ideal_generator_count(const ct_ideal* ideal);
/* {ambient:[...], gens:[[[var, exp], ...], ...]} */
CT_API ct_status ct_ideal_to_json(const ct_ideal* ideal, char** out);
CT_API ct_status ct_ideal_degree(const ct_ideal* ideal, uint64_t* degree,
                                 int* single_degree);
/* {subject, field, entries:[{i, j, beta}], reg, pd}; quotient != 0 describes
 * S/I. */
CT_API ct_status ct_ideal_betti_json(const ct_ideal* ideal, const char* field,
                                     int quotient, char** out);
CT_API ct_status ct_ideal_has_linear_resolution(const ct_ideal* ideal,
                                                const char* field, int* out);
/* CT_ERR_INVALID_ARGUMENT unless generated in a single degree. */
CT_API ct_status ct_ideal_has_linear_presentation(const ct_ideal* ideal,
                                                  const char* field, int* out);

/* theorem: main, reg-monotone, deg-linear, deletion, colon, singdeg, terai,
 * gk. Writes the report JSON and its verdict. */
CT_API ct_status ct_verify(const ct_graph* g, const char* theorem,
                           const ct_verify_params* params, char** json,
                           ct_verdict* verdict);

CT_API ct_status ct_corpus_generate(uint32_t max_n, int no_isolated,
                                    int dedup, ct_graph_list** out);
CT_API size_t ct_graph_list_size(const ct_graph_list* list);
/* Borrowed; valid until the list is freed. */
CT_API const ct_graph* ct_graph_list_at(const ct_graph_list* list, size_t i);
CT_API void ct_graph_list_free(ct_graph_list* list);

#ifdef __cplusplus
}
#endif

#endif
