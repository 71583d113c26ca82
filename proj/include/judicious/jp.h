/* C interface to the judicious partition library. */
#ifndef JUDICIOUS_JP_H
#define JUDICIOUS_JP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define JP_API __declspec(dllexport)
#elif defined(__GNUC__)
#define JP_API __attribute__((visibility("default")))
#else
#define JP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jp_status {
  JP_OK = 0,
  JP_ERR_INVALID_ARGUMENT = 1,
  JP_ERR_PARSE = 2,
  JP_ERR_TOO_LARGE = 3,
  JP_ERR_FALSIFIED = 4,
  JP_ERR_INTERNAL = 5
} jp_status;

typedef struct jp_graph jp_graph;
typedef struct jp_result jp_result;

/* Message for the last failing call on this thread ("" if none). */
JP_API const char* jp_last_error(void);
JP_API const char* jp_version(void);

/* Graphs. Edge-list text: "u v" per line, '#' comments, blank lines ignored. */
JP_API jp_status jp_graph_parse(const char* text, jp_graph** out);
JP_API jp_status jp_graph_load(const char* path, jp_graph** out);
/* Vertices 0..n-1 (labels equal indices); edges holds 2 * num_edges ints. */
JP_API jp_status jp_graph_from_edges(int n, const int* edges, size_t num_edges, jp_graph** out);
JP_API void jp_graph_free(jp_graph* g);
JP_API int jp_graph_num_vertices(const jp_graph* g);
JP_API int64_t jp_graph_num_edges(const jp_graph* g);

/* Constructions. Each returns a result holding the partition and its
 * certificate; bound failures are reported through jp_result_all_pass. */
JP_API jp_status jp_partition2(const jp_graph* g, jp_result** out);
JP_API jp_status jp_partition3(const jp_graph* g, jp_result** out);
JP_API jp_status jp_partition_small(const jp_graph* g, int k, jp_result** out);
JP_API jp_status jp_maxcut(const jp_graph* g, int k, jp_result** out);

/* Checks a partition given in parts-file text (one part per line, labels
 * separated by spaces) against "t13", "t14", "t15" or "c17". */
JP_API jp_status jp_verify(const jp_graph* g, const char* parts_text, const char* theorem,
                           jp_result** out);

JP_API int jp_result_all_pass(const jp_result* r);
JP_API int jp_result_num_parts(const jp_result* r);
/* Writes min(cap, n) part indices; returns n. */
JP_API size_t jp_result_assignment(const jp_result* r, int* out, size_t cap);
JP_API int64_t jp_result_crossing(const jp_result* r);
/* Strings stay valid until jp_result_free. */
JP_API const char* jp_result_certificate_json(const jp_result* r);
JP_API const char* jp_result_parts_text(const jp_result* r);
JP_API void jp_result_free(jp_result* r);

/* Sweeps. *summary_json must be released with jp_string_free. */
JP_API jp_status jp_sweep_all_graphs(int n, int k, int jobs, char** summary_json, int* all_pass);
JP_API jp_status jp_sweep_random(int n, double p, int count, uint64_t seed, int k, int jobs,
                                 char** summary_json, int* all_pass);
JP_API void jp_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
