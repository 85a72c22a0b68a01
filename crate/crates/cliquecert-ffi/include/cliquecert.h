#ifndef CLIQUECERT_H
#define CLIQUECERT_H

/* Generated by cbindgen from cliquecert-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Experiment selector for `cc_experiment_json`.
typedef enum {
  // PSD frequency of the filled matrix and the clique block of the
  // moment matrix; `param` is unused.
  CC_EXPERIMENT_PSD_FREQUENCY = 0,
  // Clique-count concentration; `param` is the clique size a.
  CC_EXPERIMENT_CLIQUES = 1,
  // Clique-degree concentration; `param` is the root size i.
  CC_EXPERIMENT_DEGREE = 2,
  // Operator norm of the local random matrix; `param` is the index a.
  CC_EXPERIMENT_NORM_RA = 3,
} CcExperiment;

// Status code returned by every fallible call.
typedef enum {
  CC_STATUS_OK = 0,
  // A parameter was out of range or inconsistent.
  CC_STATUS_INVALID_INPUT = 1,
  // The request exceeds a hard size cap.
  CC_STATUS_CAPACITY = 2,
  // The certificate degenerates on this input.
  CC_STATUS_DEGENERATE = 3,
  // A matrix required to be PSD is not.
  CC_STATUS_NOT_PSD = 4,
  // An iterative method failed to converge.
  CC_STATUS_NON_CONVERGENCE = 5,
  // File input/output failed.
  CC_STATUS_IO = 6,
  // A file or string had the wrong format.
  CC_STATUS_PARSE = 7,
  // JSON serialization failed.
  CC_STATUS_JSON = 8,
  // A null handle or output pointer was passed.
  CC_STATUS_NULL_POINTER = 9,
  // An internal panic was caught at the boundary.
  CC_STATUS_PANIC = 10,
} CcStatus;

// Opaque graph handle.
typedef struct CcGraph CcGraph;

// Opaque exact-rational matrix handle.
typedef struct CcMatrix CcMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Returns the library version as a caller-owned string.
//
// # Safety
// `out` must be a valid pointer.
CcStatus cc_version(char **out);

// Returns the message of the most recent failure on this thread as a
// caller-owned string, or null if the last call succeeded.
//
// # Safety
// Always safe; the returned string must be freed with `cc_string_free`.
char *cc_last_error_message(void);

// Releases a string returned by this library.  Null is ignored.
//
// # Safety
// `s` must be a pointer previously returned by this library, or null,
// and must not be used after this call.
void cc_string_free(char *s);

// Samples the random graph on `n` vertices with edge probability 1/2.
//
// # Safety
// `out` must be a valid pointer; the handle it receives must be released
// with `cc_graph_free`.
CcStatus cc_graph_sample(size_t n, uint64_t seed, CcGraph **out);

// Completes a uniformly random `k`-subset of the graph into a clique.
//
// # Safety
// `graph` must be a live graph handle; `out` as in `cc_graph_sample`.
CcStatus cc_graph_plant(const CcGraph *graph, size_t k, uint64_t seed, CcGraph **out);

// Reads a graph from the text format produced by `cc_graph_write`.
//
// # Safety
// `path` must be a NUL-terminated string; `out` as in `cc_graph_sample`.
CcStatus cc_graph_read(const char *path, CcGraph **out);

// Writes a graph as an edge list with an `n m` header line.
//
// # Safety
// `graph` must be a live graph handle and `path` a NUL-terminated string.
CcStatus cc_graph_write(const CcGraph *graph, const char *path);

// Number of vertices; zero for a null handle.
//
// # Safety
// `graph` must be a live graph handle or null.
size_t cc_graph_n(const CcGraph *graph);

// Number of edges; zero for a null handle.
//
// # Safety
// `graph` must be a live graph handle or null.
size_t cc_graph_edge_count(const CcGraph *graph);

// Writes whether the edge `{u,v}` is present.
//
// # Safety
// `graph` must be a live graph handle and `out` a valid pointer.
CcStatus cc_graph_has_edge(const CcGraph *graph, size_t u, size_t v, bool *out);

// Writes the exact number of `a`-cliques as a caller-owned decimal
// string (counts overflow fixed-width integers quickly).
//
// # Safety
// `graph` must be a live graph handle and `out` a valid pointer.
CcStatus cc_graph_clique_count(const CcGraph *graph, size_t a, char **out);

// Releases a graph handle.  Null is ignored.
//
// # Safety
// `graph` must be a handle from this library, or null, and must not be
// used after this call.
void cc_graph_free(CcGraph *graph);

// Builds the moment matrix over r-subsets (zero outside clique pairs).
//
// # Safety
// `graph` must be a live graph handle; the matrix handle written to
// `out` must be released with `cc_matrix_free`.
CcStatus cc_matrix_m(const CcGraph *graph, size_t r, size_t k, CcMatrix **out);

// Builds the filled moment matrix (the sum of contributions over all
// 2r-sets, nonzero off clique pairs as well).
//
// # Safety
// As in `cc_matrix_m`.
CcStatus cc_matrix_m_prime(const CcGraph *graph, size_t r, size_t k, CcMatrix **out);

// Builds the full moment matrix over all subsets of size at most r.
//
// # Safety
// As in `cc_matrix_m`.
CcStatus cc_matrix_full_moment(const CcGraph *graph, size_t r, size_t k, CcMatrix **out);

// Builds the expectation of the filled moment matrix over the random
// graph, which depends only on (n, r, k).
//
// # Safety
// `out` as in `cc_matrix_m`.
CcStatus cc_matrix_expectation(size_t n, size_t r, size_t k, CcMatrix **out);

// Builds the complete-graph certificate matrix for the knapsack regime.
//
// # Safety
// `out` as in `cc_matrix_m`.
CcStatus cc_matrix_grigoriev(size_t n, size_t r, size_t k, CcMatrix **out);

// Reads a matrix from the CSV format produced by `cc_matrix_write_csv`.
//
// # Safety
// `path` must be a NUL-terminated string; `out` as in `cc_matrix_m`.
CcStatus cc_matrix_read_csv(const char *path, CcMatrix **out);

// Writes a matrix as labeled CSV with exact rational entries.
//
// # Safety
// `matrix` must be a live matrix handle and `path` a NUL-terminated
// string.
CcStatus cc_matrix_write_csv(const CcMatrix *matrix, const char *path);

// Number of rows; zero for a null handle.
//
// # Safety
// `matrix` must be a live matrix handle or null.
size_t cc_matrix_rows(const CcMatrix *matrix);

// Number of columns; zero for a null handle.
//
// # Safety
// `matrix` must be a live matrix handle or null.
size_t cc_matrix_cols(const CcMatrix *matrix);

// Writes the exact entry at `(i, j)` as a caller-owned string in
// `numerator/denominator` form (plain integer when the denominator is 1).
//
// # Safety
// `matrix` must be a live matrix handle and `out` a valid pointer.
CcStatus cc_matrix_entry(const CcMatrix *matrix, size_t i, size_t j, char **out);

// Releases a matrix handle.  Null is ignored.
//
// # Safety
// `matrix` must be a handle from this library, or null, and must not be
// used after this call.
void cc_matrix_free(CcMatrix *matrix);

// Computes the full spectrum of a symmetric matrix and writes a JSON
// report with eigenvalues, extremes, scale, and the PSD verdict at the
// given relative tolerance.
//
// # Safety
// `matrix` must be a live matrix handle and `out` a valid pointer.
CcStatus cc_matrix_spectrum_json(const CcMatrix *matrix, double psd_tol, char **out);

// Runs the clique-axiom and recurrence checks of the moment functional
// on a graph and writes the violation report as JSON.
//
// # Safety
// `graph` must be a live graph handle and `out` a valid pointer.
CcStatus cc_check_axioms_json(const CcGraph *graph, size_t r, size_t k, char **out);

// Verifies the exact kernel vectors of the full moment matrix on a graph
// and writes the report (violations and kernel lower bound) as JSON.
//
// # Safety
// `graph` must be a live graph handle and `out` a valid pointer.
CcStatus cc_check_kernel_json(const CcGraph *graph, size_t r, size_t k, char **out);

// Factors the normalized full moment matrix into Gram vectors, measures
// every relaxation constraint, and writes the report as JSON.  Fails
// with the degenerate or not-PSD status when the factorization does not
// exist on this graph.
//
// # Safety
// `graph` must be a live graph handle and `out` a valid pointer.
CcStatus cc_gram_feasibility_json(const CcGraph *graph, size_t r, size_t k, double tol, char **out);

// Runs one Monte Carlo experiment and writes the full report (config
// echo, per-trial rows, summary) as JSON.
//
// # Safety
// `out` must be a valid pointer.
CcStatus cc_experiment_json(CcExperiment which,
                            size_t n,
                            size_t r,
                            size_t k,
                            size_t trials,
                            uint64_t master_seed,
                            double eps,
                            double psd_tol,
                            size_t param,
                            char **out);

// Averages every certificate piece over all graphs on `n` vertices and
// compares against the closed forms, exactly; writes the report as JSON.
// Refuses n > 5.
//
// # Safety
// `out` must be a valid pointer.
CcStatus cc_oracle_json(size_t n, size_t r, size_t k, char **out);

// Probes the largest k for which the filled matrix stays numerically PSD
// on one sampled graph; writes the report as JSON.
//
// # Safety
// `out` must be a valid pointer.
CcStatus cc_gap_probe_json(size_t n,
                           size_t r,
                           uint64_t seed,
                           size_t k_min,
                           size_t k_max,
                           char **out);

// Evaluates the trace-method norm bound and writes the report (value,
// echoed inputs, validity flag) as JSON.
//
// # Safety
// `out` must be a valid pointer.
CcStatus cc_trace_method_bound_json(size_t a,
                                    size_t y,
                                    double z,
                                    double b_const,
                                    size_t n,
                                    double eps,
                                    char **out);

// Evaluates the closed-form tail bound on the local operator norm and
// writes the report as JSON.
//
// # Safety
// `out` must be a valid pointer.
CcStatus cc_r_a_norm_bound_json(size_t a, size_t n, double eps, char **out);

// Evaluates the clique-count deviation threshold and writes the report
// as JSON.
//
// # Safety
// `out` must be a valid pointer.
CcStatus cc_clique_count_threshold_json(size_t a, size_t n, double eps, char **out);

// Evaluates the clique-degree deviation threshold and writes the report
// as JSON (the exact conditional center is echoed in the inputs).
//
// # Safety
// `out` must be a valid pointer.
CcStatus cc_degree_threshold_json(size_t r, size_t i, size_t n, double eps, char **out);

// Writes the two-sided bounded-difference tail probability for
// `num_vars` variables with per-variable influence `c` at deviation `t`.
//
// # Safety
// `out` must be a valid pointer.
CcStatus cc_mcdiarmid_tail(size_t num_vars, double c, double t, double *out);

// Writes the clique-number threshold below which the certificate regime
// applies, with explicit constant `constant_c`.
//
// # Safety
// `out` must be a valid pointer.
CcStatus cc_k_threshold(double n, size_t r, double constant_c, double *out);

// Writes the Gershgorin disc bound on the spectral norm of a matrix.
//
// # Safety
// `matrix` must be a live matrix handle and `out` a valid pointer.
CcStatus cc_gershgorin_bound(const CcMatrix *matrix, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLIQUECERT_H */
