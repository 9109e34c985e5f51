// Copyright 2026 The pathcell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the pathcell engine.
 *
 * Digraphs and graphs are opaque handles. Every computation returns a
 * pathcell_status and, on success or on a failed check, a JSON document
 * through `out` that the caller releases with pathcell_string_free. On error
 * pathcell_last_error() describes the failure for the calling thread.
 */
#ifndef PATHCELL_PATHCELL_H_
#define PATHCELL_PATHCELL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(PATHCELL_BUILDING_LIBRARY)
#define PATHCELL_API __attribute__((visibility("default")))
#else
#define PATHCELL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pathcell_status {
  PATHCELL_OK = 0,
  PATHCELL_ERR_PARSE = 1,            /* malformed input document */
  PATHCELL_ERR_INVALID_ARGUMENT = 2, /* bad option, map, or file */
  PATHCELL_ERR_DOMAIN = 3,           /* mathematical precondition violated */
  PATHCELL_ERR_INVARIANT = 4,        /* internal consistency failure */
  PATHCELL_CHECK_FAILED = 5,         /* computed fine, but a checked property fails; JSON is set */
  PATHCELL_ERR_INTERNAL = 6
} pathcell_status;

typedef struct pathcell_digraph pathcell_digraph;
typedef struct pathcell_graph pathcell_graph;

typedef struct pathcell_options {
  int has_max_dim;    /* 0: use vertex count - 1 */
  uint32_t max_dim;
  char coefficients;  /* 'z', 'q' or 'p' (integers mod prime) */
  uint32_t prime;
  uint32_t threads;   /* 0 or 1: single-threaded */
} pathcell_options;

PATHCELL_API const char* pathcell_version(void);
PATHCELL_API const char* pathcell_last_error(void);
PATHCELL_API void pathcell_options_init(pathcell_options* options);
PATHCELL_API void pathcell_string_free(char* s);

PATHCELL_API pathcell_status pathcell_digraph_parse(const char* text, pathcell_digraph** out);
PATHCELL_API pathcell_status pathcell_digraph_load(const char* path, pathcell_digraph** out);
PATHCELL_API void pathcell_digraph_free(pathcell_digraph* g);
PATHCELL_API size_t pathcell_digraph_vertex_count(const pathcell_digraph* g);
PATHCELL_API size_t pathcell_digraph_edge_count(const pathcell_digraph* g);
/* Cartesian product g □ h; vertices are named "(u,v)". */
PATHCELL_API pathcell_status pathcell_digraph_product(const pathcell_digraph* g, const pathcell_digraph* h,
                                                      pathcell_digraph** out);
/* Edge-list text in the .dg format. */
PATHCELL_API pathcell_status pathcell_digraph_text(const pathcell_digraph* g, char** out);

PATHCELL_API pathcell_status pathcell_graph_parse(const char* text, pathcell_graph** out);
PATHCELL_API pathcell_status pathcell_graph_load(const char* path, pathcell_graph** out);
PATHCELL_API void pathcell_graph_free(pathcell_graph* g);
PATHCELL_API size_t pathcell_graph_vertex_count(const pathcell_graph* g);

/* One entry point per CLI subcommand. `options` may be NULL for defaults. */
PATHCELL_API pathcell_status pathcell_omega_json(const pathcell_digraph* g, const pathcell_options* options, char** out);
PATHCELL_API pathcell_status pathcell_basis_json(const pathcell_digraph* g, const pathcell_options* options, char** out);
PATHCELL_API pathcell_status pathcell_homology_json(const pathcell_digraph* g, const pathcell_options* options,
                                                    char** out);
PATHCELL_API pathcell_status pathcell_cohomology_json(const pathcell_digraph* g, const pathcell_options* options,
                                                      char** out);
PATHCELL_API pathcell_status pathcell_cup_json(const pathcell_digraph* g, const pathcell_options* options, char** out);
PATHCELL_API pathcell_status pathcell_cw_export_json(const pathcell_digraph* g, const pathcell_options* options,
                                                     char** out);
PATHCELL_API pathcell_status pathcell_subdivide_json(const pathcell_digraph* g, const pathcell_options* options,
                                                     char** out);
PATHCELL_API pathcell_status pathcell_sphere_check_json(const pathcell_digraph* g, const pathcell_options* options,
                                                        char** out);
PATHCELL_API pathcell_status pathcell_poincare_check_json(const pathcell_digraph* g, const pathcell_options* options,
                                                          char** out);
PATHCELL_API pathcell_status pathcell_clique_json(const pathcell_graph* g, const pathcell_options* options, char** out);
PATHCELL_API pathcell_status pathcell_cech_json(const pathcell_graph* g, const pathcell_options* options, char** out);
/* `map` is "u:v" pairs separated by commas or spaces. */
PATHCELL_API pathcell_status pathcell_lefschetz_json(const pathcell_digraph* g, const char* map, int broad,
                                                     const pathcell_options* options, char** out);
PATHCELL_API pathcell_status pathcell_lefschetz_graph_json(const pathcell_graph* g, const char* map,
                                                           const pathcell_options* options, char** out);
PATHCELL_API pathcell_status pathcell_kunneth_json(const pathcell_digraph* g, const pathcell_digraph* h,
                                                   const pathcell_options* options, char** out);
/* f_map and g_map may both be NULL to check every one-step-homotopic pair. */
PATHCELL_API pathcell_status pathcell_homotopy_check_json(const pathcell_digraph* g, const pathcell_digraph* h,
                                                          const char* f_map, const char* g_map,
                                                          const pathcell_options* options, char** out);
PATHCELL_API pathcell_status pathcell_bench_json(const char* family, const size_t* sizes, size_t size_count, size_t k,
                                                 char** out);
/* graphs != 0: all simple graphs; otherwise digraphs, exhaustive when sample == 0. */
PATHCELL_API pathcell_status pathcell_corpus_json(int graphs, size_t max_vertices, size_t sample, uint64_t seed,
                                                  char** out);

#ifdef __cplusplus
}
#endif

#endif  // PATHCELL_PATHCELL_H_
