/*
   Copyright 2026 The pfnsn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#ifndef PFNSN_H
#define PFNSN_H

/* C interface to the pfnsn library.
 *
 * Nets are opaque handles owned by the caller and released with
 * pfnsn_net_destroy(). Every fallible call returns a pfnsn_status; on failure
 * pfnsn_last_error() describes the most recent error on the calling thread.
 * Strings returned through `char **` out-parameters are heap copies released
 * with pfnsn_string_free().
 *
 * A completed net may be read from several threads at once. Mutating calls
 * (add_vertex, add_edge) need external synchronization.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(PFNSN_BUILDING_LIBRARY)
#    define PFNSN_API __declspec(dllexport)
#  else
#    define PFNSN_API __declspec(dllimport)
#  endif
#else
#  define PFNSN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pfnsn_status {
    PFNSN_OK = 0,
    PFNSN_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad enum value, bad shape */
    PFNSN_ERR_PARSE = 2,            /* DSL syntax or content error; line/column set */
    PFNSN_ERR_JSON = 3,             /* JSON malformed, schema or invariant error; path set */
    PFNSN_ERR_RANGE = 4,            /* degree or scale outside its domain */
    PFNSN_ERR_DUPLICATE = 5,        /* duplicate vertex label or vertex pair */
    PFNSN_ERR_NOT_FOUND = 6,        /* unknown vertex */
    PFNSN_ERR_LOOP = 7,             /* self-loop rejected */
    PFNSN_ERR_BUFFER_TOO_SMALL = 8, /* caller buffer capacity insufficient; required size reported */
    PFNSN_ERR_EMPTY = 9,            /* operation undefined for an empty net */
    PFNSN_ERR_INTERNAL = 99
} pfnsn_status;

typedef enum pfnsn_mode { PFNSN_MODE_FNSN = 0, PFNSN_MODE_PNSN = 1, PFNSN_MODE_PFNSN = 2 } pfnsn_mode;

typedef enum pfnsn_preference {
    PFNSN_PREFER_POSITIVE = 0,
    PFNSN_PREFER_NEUTRAL = 1,
    PFNSN_PREFER_NEGATIVE = 2
} pfnsn_preference;

typedef enum pfnsn_polarity_label {
    PFNSN_POLARITY_POSITIVE = 0,
    PFNSN_POLARITY_NEUTRAL = 1,
    PFNSN_POLARITY_NEGATIVE = 2
} pfnsn_polarity_label;

/* A determinate degree, or (indeterminate != 0) a coefficient n of n*I. */
typedef struct pfnsn_value {
    int indeterminate;
    double magnitude;
} pfnsn_value;

typedef struct pfnsn_triple {
    pfnsn_value channel[3];
} pfnsn_triple;

typedef struct pfnsn_normalized {
    double p;
    double u;
    double n;
    int has_indeterminacy;
} pfnsn_normalized;

typedef struct pfnsn_ranked {
    size_t vertex;
    pfnsn_normalized combined;
    double score;
} pfnsn_ranked;

typedef struct pfnsn_graph_class {
    int has_indeterminate_vertex;
    int has_indeterminate_edge;
    int is_point_graph;
    int is_edge_graph;
    int is_strongly_neutrosophic;
    int is_neutrosophic_simple;
} pfnsn_graph_class;

typedef struct pfnsn_order {
    size_t ordinary;
    size_t indeterminate;
    size_t total;
} pfnsn_order;

typedef struct pfnsn_edge_info {
    size_t src;
    size_t dst;
    const char *label; /* owned by the net */
    int indeterminate;
    pfnsn_triple weight;
} pfnsn_edge_info;

typedef struct pfnsn_error {
    pfnsn_status status;
    const char *message; /* valid until the next failing call on this thread */
    size_t line;         /* PFNSN_ERR_PARSE: 1-based, else 0 */
    size_t column;       /* PFNSN_ERR_PARSE: 1-based, else 0 */
    const char *snippet; /* PFNSN_ERR_PARSE: offending line, else "" */
    const char *path;    /* PFNSN_ERR_JSON: e.g. "$.edges[0].src", else "" */
} pfnsn_error;

typedef struct pfnsn_net pfnsn_net;

PFNSN_API const char *pfnsn_version(void);
PFNSN_API const char *pfnsn_status_string(pfnsn_status status);
PFNSN_API pfnsn_error pfnsn_last_error(void);
PFNSN_API void pfnsn_string_free(char *s);

/* Construction. `scale` may be NULL for the default (3, 2, 1). */
PFNSN_API pfnsn_status pfnsn_net_create(pfnsn_mode mode, const char *name, const double *scale, int directed,
                                        pfnsn_net **out);
PFNSN_API void pfnsn_net_destroy(pfnsn_net *net);
PFNSN_API pfnsn_status pfnsn_net_clone(const pfnsn_net *net, pfnsn_net **out);
/* Copy of `net` re-tagged with another mode; contents are not re-checked. */
PFNSN_API pfnsn_status pfnsn_net_with_mode(const pfnsn_net *net, pfnsn_mode mode, pfnsn_net **out);
PFNSN_API pfnsn_status pfnsn_net_add_vertex(pfnsn_net *net, const char *label, const pfnsn_triple *membership,
                                            int indeterminate, size_t *out_id);
PFNSN_API pfnsn_status pfnsn_net_add_edge(pfnsn_net *net, size_t src, size_t dst, const char *label,
                                          const pfnsn_triple *weight, int indeterminate, size_t *out_id);

/* Loading and saving. */
PFNSN_API pfnsn_status pfnsn_net_parse(const char *source, size_t length, pfnsn_net **out);
PFNSN_API pfnsn_status pfnsn_net_from_json(const char *document, size_t length, pfnsn_net **out);
PFNSN_API pfnsn_status pfnsn_net_format(const pfnsn_net *net, char **out);
PFNSN_API pfnsn_status pfnsn_net_to_json(const pfnsn_net *net, char **out);
PFNSN_API pfnsn_status pfnsn_net_to_dot(const pfnsn_net *net, char **out);

/* Inspection. */
PFNSN_API pfnsn_mode pfnsn_net_mode(const pfnsn_net *net);
PFNSN_API const char *pfnsn_net_name(const pfnsn_net *net);
PFNSN_API void pfnsn_net_scale(const pfnsn_net *net, double out_scale[3]);
PFNSN_API int pfnsn_net_directed(const pfnsn_net *net);
PFNSN_API size_t pfnsn_net_vertex_count(const pfnsn_net *net);
PFNSN_API size_t pfnsn_net_edge_count(const pfnsn_net *net);
/* NULL when `id` is out of range. */
PFNSN_API const char *pfnsn_net_vertex_label(const pfnsn_net *net, size_t id);
PFNSN_API int pfnsn_net_vertex_indeterminate(const pfnsn_net *net, size_t id);
PFNSN_API pfnsn_status pfnsn_net_find_vertex(const pfnsn_net *net, const char *label, size_t *out_id);
PFNSN_API pfnsn_status pfnsn_net_edge(const pfnsn_net *net, size_t index, pfnsn_edge_info *out);

/* Validation reports one line per violation, warnings prefixed "warning: ".
 * `*error_count` counts error-class violations only. `report` may be NULL. */
PFNSN_API pfnsn_status pfnsn_net_validate(const pfnsn_net *net, size_t *error_count, size_t *warning_count,
                                          char **report);
PFNSN_API pfnsn_status pfnsn_net_classify(const pfnsn_net *net, pfnsn_graph_class *out);
PFNSN_API pfnsn_status pfnsn_net_order(const pfnsn_net *net, pfnsn_order *out);

/* Matrices. `rows` holds vertex_count triples; `slices` holds 3*n*n values
 * laid out slice-major then row-major: slices[k*n*n + i*n + j]. Pass the
 * capacity in elements; on PFNSN_ERR_BUFFER_TOO_SMALL `*required` is set. */
PFNSN_API pfnsn_status pfnsn_net_membership(const pfnsn_net *net, pfnsn_triple *rows, size_t capacity,
                                            size_t *required);
PFNSN_API pfnsn_status pfnsn_net_adjacency(const pfnsn_net *net, pfnsn_value *slices, size_t capacity,
                                           size_t *required);
/* Rebuilds a directed net from n labels, n membership rows and a 3*n*n tensor. */
PFNSN_API pfnsn_status pfnsn_net_from_matrices(pfnsn_mode mode, const char *name, const double *scale,
                                               const char *const *labels, size_t n, const pfnsn_triple *rows,
                                               const pfnsn_value *slices, pfnsn_net **out);

/* Analysis. */
PFNSN_API pfnsn_status pfnsn_normalize(const pfnsn_triple *triple, const double scale[3], pfnsn_normalized *out);
PFNSN_API pfnsn_normalized pfnsn_combine(pfnsn_normalized edge, pfnsn_normalized neighbor);
PFNSN_API double pfnsn_polarity_score(pfnsn_normalized t);
/* Two-call pattern: pass ranked=NULL to learn `*count`. */
PFNSN_API pfnsn_status pfnsn_polar_select(const pfnsn_net *net, size_t vertex, pfnsn_preference preference,
                                          pfnsn_ranked *ranked, size_t capacity, size_t *count);
PFNSN_API pfnsn_status pfnsn_net_polarity(const pfnsn_net *net, double threshold, pfnsn_normalized *summary,
                                          double *score, pfnsn_polarity_label *label);

#ifdef __cplusplus
}
#endif

#endif /* PFNSN_H */
