/* eajr — parameterized graph-problem benchmark library.
 *
 * C interface over the C++ core: opaque handles, integer status codes, and
 * caller-provided buffers. Every function returns EAJR_OK on success; any
 * handle produced by the library is released with its matching _free call.
 */
#ifndef EAJR_H
#define EAJR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eajr_status {
    EAJR_OK = 0,
    EAJR_ERR_INVALID_ARGUMENT = 1,
    EAJR_ERR_IO = 2,
    EAJR_ERR_LIMIT = 3,     /* oracle cap exceeded */
    EAJR_ERR_CONTRACT = 4,  /* precondition violated */
    EAJR_ERR_BUFFER = 5,    /* caller buffer too small */
    EAJR_ERR_INTERNAL = 6
} eajr_status;

typedef enum eajr_problem {
    EAJR_PROBLEM_VC = 0,
    EAJR_PROBLEM_FVST = 1,
    EAJR_PROBLEM_OCT = 2
} eajr_problem;

typedef enum eajr_algorithm {
    EAJR_ALGO_EA_K = 0,
    EAJR_ALGO_STANDARD_EA = 1,
    EAJR_ALGO_ITER_COMPRESSION = 2,
    EAJR_ALGO_RESTART = 3
} eajr_algorithm;

/* Opaque instance handle: a graph, the problem kind, and the parameter k. */
typedef struct eajr_instance eajr_instance;

const char* eajr_status_message(eajr_status status);

/* ---- instance lifecycle -------------------------------------------- */

eajr_status eajr_instance_read(const char* path, eajr_instance** out);
eajr_status eajr_instance_write(const eajr_instance* inst, const char* path);
void eajr_instance_free(eajr_instance* inst);

int eajr_instance_vertices(const eajr_instance* inst);
long long eajr_instance_edges(const eajr_instance* inst);
int eajr_instance_k(const eajr_instance* inst);
eajr_problem eajr_instance_problem(const eajr_instance* inst);
eajr_status eajr_instance_set_k(eajr_instance* inst, int k);

/* Known optimum (from the construction), or -1 when unknown. */
int eajr_instance_known_optimum(const eajr_instance* inst);
/* Planted solution ids into buf; *out_len set to the count (0 if none). */
eajr_status eajr_instance_planted(const eajr_instance* inst, int* buf, int capacity,
                                  int* out_len);

/* ---- generators ----------------------------------------------------- */

eajr_status eajr_generate_random_planted(int n, int k, double p, uint64_t seed,
                                         eajr_instance** out);
eajr_status eajr_generate_clique_anticlique(int n, int k, eajr_instance** out);
eajr_status eajr_generate_biclique(int n, int k, eajr_instance** out);
eajr_status eajr_generate_papadimitriou_steiglitz(int order, eajr_instance** out);
eajr_status eajr_generate_oliveto_he_yao(int blocks, double eps, eajr_instance** out);
eajr_status eajr_generate_random_tournament(int n, int k, uint64_t seed, eajr_instance** out);
eajr_status eajr_generate_random_oct(int n, int k, uint64_t seed, eajr_instance** out);

/* ---- verification and exact solving --------------------------------- */

/* *out_valid = 1 iff |ids| <= k and the set solves the whole instance. */
eajr_status eajr_verify_solution(const eajr_instance* inst, const int* ids, int count,
                                 int* out_valid);

/* Exact minimum (desk-scale caps apply). witness_buf may be NULL when
 * capacity is 0 and only the size is wanted. */
eajr_status eajr_oracle_minimum(const eajr_instance* inst, int* out_size, int* witness_buf,
                                int capacity, int* out_len);

/* ---- single runs ----------------------------------------------------- */

typedef struct eajr_run_result {
    int success;
    long long iterations;
    long long budget;
    uint64_t seed;
    int k_found; /* restart only; otherwise -1 */
} eajr_run_result;

/* Runs one algorithm on the instance. budget <= 0 selects the per-problem
 * FPT formula cutoff (ignored by iterative compression and restart). The
 * solution found (if any) is written to solution_buf. */
eajr_status eajr_run(const eajr_instance* inst, eajr_algorithm algorithm, uint64_t seed,
                     long long budget, eajr_run_result* out, int* solution_buf, int capacity,
                     int* out_len);

/* ---- experiments ------------------------------------------------------ */

typedef struct eajr_experiment_config {
    eajr_algorithm algorithm;
    eajr_problem problem;
    const char* generator; /* random_planted | clique_anticlique | biclique |
                              papadimitriou_steiglitz | oliveto_he_yao |
                              random_tournament | random_oct | file */
    const char* instance_file; /* generator == "file"; else NULL */
    const int* n_values;
    int n_count;
    const int* k_values;
    int k_count;
    const double* p_values;
    int p_count;
    const double* eps_values;
    int eps_count;
    const int* l_values;
    int l_count;
    int instances_per_cell;
    int replicas;
    long long budget; /* <= 0 selects the FPT formula cutoff */
    uint64_t master_seed;
    int workers;
    int write_records; /* nonzero: emit records.txt */
    int write_ecdf;    /* nonzero: emit per-cell ECDF files */
    const char* out_dir;
} eajr_experiment_config;

/* Runs the whole grid and writes data files under out_dir. Output is
 * byte-identical for a fixed master seed regardless of worker count. */
eajr_status eajr_experiment_run(const eajr_experiment_config* config);

/* ---- record post-processing ------------------------------------------ */

/* Reads a records.txt and aggregates mean/sd per (n,k,p) slice; normalized
 * nonzero divides mean and sd by n^2 ln n. */
eajr_status eajr_summarize_records(const char* records_path, const char* out_path,
                                   int normalized);
eajr_status eajr_ecdf_records(const char* records_path, const char* out_path);

#ifdef __cplusplus
}
#endif

#endif /* EAJR_H */
