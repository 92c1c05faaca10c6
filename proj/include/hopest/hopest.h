/*
 * Copyright 2026 The hopest Authors
 * SPDX-License-Identifier: Apache-2.0
 */

/*
 * C interface to the hopest library.
 *
 * Objects are opaque handles created by hopest_*_create / *_compute /
 * *_from_json functions and released by the matching *_free function.
 * Every fallible call returns a hopest_status; on failure the output handle
 * is left untouched and hopest_last_error() describes the problem (the
 * message is thread-local and valid until the next failing call on the same
 * thread). Sites and vertices are 1-indexed throughout.
 *
 * Array outputs follow one convention: the caller passes a buffer and its
 * capacity in elements; the call fails with HOPEST_ERR_CAPACITY if the buffer
 * is too small. Strings returned through char** are owned by the caller and
 * must be released with hopest_string_free.
 */

#ifndef HOPEST_HOPEST_H
#define HOPEST_HOPEST_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HOPEST_BUILDING_LIBRARY)
#    define HOPEST_API __declspec(dllexport)
#  else
#    define HOPEST_API __declspec(dllimport)
#  endif
#else
#  define HOPEST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hopest_status {
  HOPEST_OK = 0,
  HOPEST_ERR_VALIDATION = 1,  /* bad argument, violated invariant, bad JSON */
  HOPEST_ERR_CONVERGENCE = 2, /* eigensolver iteration budget exhausted */
  HOPEST_ERR_UNSUPPORTED = 3, /* size above a brute-force cap */
  HOPEST_ERR_CAPACITY = 4,    /* output buffer too small */
  HOPEST_ERR_INTERNAL = 5
} hopest_status;

typedef struct hopest_edge {
  size_t i;
  size_t j;
  double weight;
} hopest_edge;

typedef struct hopest_model hopest_model;
typedef struct hopest_spectrum hopest_spectrum;
typedef struct hopest_reconstruction hopest_reconstruction;
typedef struct hopest_graph hopest_graph;
typedef struct hopest_table hopest_table;

HOPEST_API const char* hopest_version(void);
HOPEST_API const char* hopest_last_error(void);
HOPEST_API const char* hopest_status_name(hopest_status status);
HOPEST_API void hopest_string_free(char* s);

/* ---- model ------------------------------------------------------------ */

/* Chain with nearest[0..n_sites-2] plus optional long-range edges scaled by
 * epsilon. Pass n_edges = 0 (edges may be NULL) for a bare chain. */
HOPEST_API hopest_status hopest_model_create(size_t n_sites,
                                             const double* nearest,
                                             double epsilon,
                                             const hopest_edge* edges,
                                             size_t n_edges,
                                             hopest_model** out);

/* Canonical next-nearest topology: d_values has n_sites - 2 entries. */
HOPEST_API hopest_status hopest_model_create_nnn(size_t n_sites,
                                                 const double* nearest,
                                                 const double* d_values,
                                                 double epsilon,
                                                 hopest_model** out);

/* Ensemble member `instance` drawn exactly as the experiments draw it at
 * epsilon-grid index 0 (see the config document described below). */
HOPEST_API hopest_status hopest_model_sample(const char* config_json,
                                             size_t instance, double epsilon,
                                             hopest_model** out);

HOPEST_API hopest_status hopest_model_from_json(const char* json,
                                                hopest_model** out);
HOPEST_API hopest_status hopest_model_to_json(const hopest_model* model,
                                              char** out);
HOPEST_API void hopest_model_free(hopest_model* model);

HOPEST_API size_t hopest_model_sites(const hopest_model* model);
HOPEST_API double hopest_model_epsilon(const hopest_model* model);
HOPEST_API hopest_status hopest_model_couplings(const hopest_model* model,
                                                double* out, size_t capacity);

/* Long-range edges; returns the edge count, copying at most capacity. */
HOPEST_API size_t hopest_model_edges(const hopest_model* model,
                                     hopest_edge* out, size_t capacity);

/* Row-major n_sites x n_sites H^eps (H_C when the model has no edges). */
HOPEST_API hopest_status hopest_model_hamiltonian(const hopest_model* model,
                                                  double* out,
                                                  size_t capacity);

/* ---- spectral --------------------------------------------------------- */

HOPEST_API hopest_status hopest_spectrum_compute(const hopest_model* model,
                                                 hopest_spectrum** out);

/* Any real symmetric dim x dim matrix, row-major. */
HOPEST_API hopest_status hopest_spectrum_from_matrix(size_t dim,
                                                     const double* entries,
                                                     hopest_spectrum** out);
HOPEST_API void hopest_spectrum_free(hopest_spectrum* spectrum);

HOPEST_API size_t hopest_spectrum_dim(const hopest_spectrum* spectrum);
HOPEST_API int hopest_spectrum_near_degenerate(const hopest_spectrum* spectrum);
HOPEST_API hopest_status hopest_spectrum_eigenvalues(
    const hopest_spectrum* spectrum, double* out, size_t capacity);
HOPEST_API hopest_status hopest_spectrum_overlaps(
    const hopest_spectrum* spectrum, size_t site, double* out,
    size_t capacity);
HOPEST_API hopest_status hopest_spectrum_moment(const hopest_spectrum* spectrum,
                                                size_t site, unsigned power,
                                                double* out);
/* CSV with columns k,e_k,w1_k,w2_k (squared overlaps at sites 1 and 2). */
HOPEST_API hopest_status hopest_spectrum_csv(const hopest_spectrum* spectrum,
                                             char** out);

/* ---- estimation ------------------------------------------------------- */

HOPEST_API hopest_status hopest_reconstruct_nearest(
    const double* eigenvalues, const double* site1_overlaps, size_t n,
    size_t max_terms, hopest_reconstruction** out);

HOPEST_API hopest_status hopest_reconstruct_next_nearest(
    const double* eigenvalues, const double* site1_overlaps,
    const double* site2_overlaps, size_t n, double epsilon,
    hopest_reconstruction** out);

/* Same recursions fed directly from a computed spectrum. These keep the
 * solver's extended-precision remainders, so prefer them over the array
 * forms whenever the spectrum came from hopest_spectrum_compute. */
HOPEST_API hopest_status hopest_reconstruct_spectrum_nearest(
    const hopest_spectrum* spectrum, size_t max_terms,
    hopest_reconstruction** out);
HOPEST_API hopest_status hopest_reconstruct_spectrum_next_nearest(
    const hopest_spectrum* spectrum, double epsilon,
    hopest_reconstruction** out);

HOPEST_API void hopest_reconstruction_free(hopest_reconstruction* result);

/* Number of estimated nearest couplings c_n. */
HOPEST_API size_t hopest_reconstruction_count(
    const hopest_reconstruction* result);
/* Number of estimated next-nearest couplings d_n (0 for the nearest scheme). */
HOPEST_API size_t hopest_reconstruction_second_count(
    const hopest_reconstruction* result);
/* 1-indexed breakdown position, or 0 when the recursion ran to completion. */
HOPEST_API size_t hopest_reconstruction_breakdown(
    const hopest_reconstruction* result);
HOPEST_API hopest_status hopest_reconstruction_couplings(
    const hopest_reconstruction* result, double* out, size_t capacity);
HOPEST_API hopest_status hopest_reconstruction_second_couplings(
    const hopest_reconstruction* result, double* out, size_t capacity);

/* delta[n] = sqrt(|est[n]^2 - truth[n]^2|) for n < n_estimated. */
HOPEST_API hopest_status hopest_estimation_errors(const double* truth,
                                                  size_t n_true,
                                                  const double* estimated,
                                                  size_t n_estimated,
                                                  double* out);

/* Delta_n of the reconstructed couplings against truth. Unlike
 * hopest_estimation_errors this uses the recursion's full-precision values,
 * which matters once Delta_n approaches 1e-8 * c_n. */
HOPEST_API hopest_status hopest_reconstruction_errors(
    const hopest_reconstruction* result, const double* truth, size_t n_true,
    double* out, size_t capacity);

/* ---- zero forcing ----------------------------------------------------- */

/* pairs holds 2 * n_edges vertex indices. */
HOPEST_API hopest_status hopest_graph_create(size_t n_vertices,
                                             const size_t* pairs,
                                             size_t n_edges,
                                             hopest_graph** out);
HOPEST_API hopest_status hopest_graph_from_json(const char* json,
                                                hopest_graph** out);
HOPEST_API void hopest_graph_free(hopest_graph* graph);
HOPEST_API size_t hopest_graph_vertices(const hopest_graph* graph);

/* blue_out[v-1] is set to 1 for every vertex in the closure, else 0. */
HOPEST_API hopest_status hopest_zero_forcing_closure(const hopest_graph* graph,
                                                     const size_t* initial,
                                                     size_t n_initial,
                                                     unsigned char* blue_out,
                                                     size_t capacity);
HOPEST_API hopest_status hopest_is_zero_forcing_set(const hopest_graph* graph,
                                                    const size_t* candidate,
                                                    size_t n_candidate,
                                                    int* out);
/* cap = 0 selects the default cap of 16 vertices. */
HOPEST_API hopest_status hopest_minimum_zero_forcing_number(
    const hopest_graph* graph, size_t cap, size_t* out);

/* ---- analysis --------------------------------------------------------- */

HOPEST_API double hopest_ansatz_bound(size_t n, double p, double epsilon,
                                      double max_d);

/* deltas may be shorter than n_sites - 1 (breakdown); NaN counts as failure. */
HOPEST_API hopest_status hopest_critical_length(const double* deltas,
                                                size_t n_deltas,
                                                size_t n_sites,
                                                double threshold,
                                                size_t* out);

/* Experiments take an ensemble config JSON document:
 *   {"master_seed": 42, "instances": 1000, "n_sites": 30,
 *    "coupling_low": 0.95, "coupling_high": 1.05,
 *    "epsilon_grid": [0, 1e-6, ...],
 *    "topology": "nnn" | "random:<count>" | {"edges": [[i, j], ...]}}
 * Members missing from the document take their defaults. workers = 0 means 1.
 */
/* Applies defaults to a config document, validates it, and returns the fully
 * resolved document. */
HOPEST_API hopest_status hopest_config_resolve(const char* config_json,
                                               char** out);

HOPEST_API hopest_status hopest_error_profile(const char* config_json,
                                              double epsilon, unsigned workers,
                                              hopest_table** out);
HOPEST_API hopest_status hopest_critical_length_sweep(const char* config_json,
                                                      double threshold,
                                                      unsigned workers,
                                                      hopest_table** out);
/* variants_json: [{"label": "nnn", "topology": "nnn"}, ...]. */
HOPEST_API hopest_status hopest_topology_compare(const char* config_json,
                                                 const char* variants_json,
                                                 double epsilon,
                                                 unsigned workers,
                                                 hopest_table** out);

HOPEST_API void hopest_table_free(hopest_table* table);
HOPEST_API size_t hopest_table_rows(const hopest_table* table);
HOPEST_API size_t hopest_table_columns(const hopest_table* table);
/* Column name; NULL when out of range. Valid for the table's lifetime. */
HOPEST_API const char* hopest_table_column_name(const hopest_table* table,
                                                size_t column);
/* Numeric cell; NaN for text cells (the topology label column). */
HOPEST_API double hopest_table_value(const hopest_table* table, size_t row,
                                     size_t column);
/* header != 0 includes the column-name line. */
HOPEST_API hopest_status hopest_table_csv(const hopest_table* table,
                                          int header, char** out);
HOPEST_API hopest_status hopest_table_json(const hopest_table* table,
                                           char** out);

#ifdef __cplusplus
}
#endif

#endif /* HOPEST_HOPEST_H */
