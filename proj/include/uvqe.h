/* Copyright 2026 The uvqe authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the uvqe shared library: ansatz-free variational
 * ground-state search by Riemannian gradient descent on the unitary group,
 * with spectral analysis, small-angle random Pauli-rotation initialization
 * and finite-shot measurement simulation.
 *
 * All functions returning uvqe_status report UVQE_OK on success. On failure
 * uvqe_last_error() returns a thread-local description of the most recent
 * error. Handles are opaque; distinct handles may be used concurrently from
 * different threads, a single handle must not be mutated concurrently.
 */

#ifndef UVQE_H
#define UVQE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int32_t uvqe_status;

enum {
  UVQE_OK = 0,
  UVQE_ERR_INVALID_ARGUMENT = 1,
  UVQE_ERR_NON_SQUARE = 2,
  UVQE_ERR_NON_HERMITIAN = 3,
  UVQE_ERR_RANK_DEFICIENT = 4,
  UVQE_ERR_NON_UNITARY = 5,
  UVQE_ERR_NON_SKEW_HERMITIAN = 6,
  UVQE_ERR_DIMENSION_MISMATCH = 7,
  UVQE_ERR_INDEX_OUT_OF_RANGE = 8,
  UVQE_ERR_GAPLESS_SPECTRUM = 9,
  UVQE_ERR_TOO_MANY_QUBITS = 10,
  UVQE_ERR_NON_POWER_OF_TWO_DIM = 11,
  UVQE_ERR_TOO_FEW_DISTINCT_STRINGS = 12,
  UVQE_ERR_RATE_OUT_OF_RANGE = 13,
  UVQE_ERR_INVALID_CONSTANTS = 14,
  UVQE_ERR_BUDGET_TOO_SMALL = 15,
  UVQE_ERR_ALL_ZERO_COEFFICIENTS = 16,
  UVQE_ERR_PARSE = 17,
  UVQE_ERR_IO = 18,
  UVQE_ERR_INTERNAL = 19
};

const char* uvqe_version(void);

/* Thread-local message describing the most recent failure in this thread. */
const char* uvqe_last_error(void);

/* Deterministic seed derivation for indexed sub-tasks (trials, sweeps). */
uint64_t uvqe_mix_seed(uint64_t base, uint64_t index);

/* ------------------------------------------------------------------ */
/* Random streams                                                      */

typedef struct uvqe_rng uvqe_rng;

uvqe_status uvqe_rng_create(uint64_t seed, uvqe_rng** out);
void uvqe_rng_destroy(uvqe_rng* rng);

/* ------------------------------------------------------------------ */
/* Hamiltonians                                                        */

typedef struct uvqe_hamiltonian uvqe_hamiltonian;

/* Transverse-field Ising chain, open boundary. */
uvqe_status uvqe_hamiltonian_tfim(int qubits, uvqe_hamiltonian** out);

/* `num_terms` distinct uniformly random Pauli strings with Gaussian
 * coefficients normalized to unit squared sum. */
uvqe_status uvqe_hamiltonian_random_pauli(int qubits, int num_terms,
                                          uint64_t seed,
                                          uvqe_hamiltonian** out);

/* Text format: `<coefficient> <string>` per line, `#` comments. */
uvqe_status uvqe_hamiltonian_from_file(const char* path,
                                       uvqe_hamiltonian** out);

/* Dense Hermitian matrix file (dimension header, then row-major re/im
 * pairs), expanded into Pauli terms. */
uvqe_status uvqe_hamiltonian_from_dense_file(const char* path,
                                             uvqe_hamiltonian** out);

uvqe_status uvqe_hamiltonian_write_file(const uvqe_hamiltonian* h,
                                        const char* path);

void uvqe_hamiltonian_destroy(uvqe_hamiltonian* h);

int uvqe_hamiltonian_qubits(const uvqe_hamiltonian* h);
int uvqe_hamiltonian_dim(const uvqe_hamiltonian* h);
int uvqe_hamiltonian_num_terms(const uvqe_hamiltonian* h);

/* Copies the term coefficients into `out` (capacity `cap`). */
uvqe_status uvqe_hamiltonian_coefficients(const uvqe_hamiltonian* h,
                                          double* out, int cap);

/* Writes the NUL-terminated letters of term `index` into `buf`. */
uvqe_status uvqe_hamiltonian_term_string(const uvqe_hamiltonian* h, int index,
                                         char* buf, int cap);

typedef struct {
  int dim;
  double ground_energy;     /* E_0 */
  int ground_degeneracy;    /* number of energies at E_0 */
  double gap;               /* distance to the first energy above E_0 */
  double norm;              /* spectral norm */
} uvqe_spectrum_info;

/* Exact diagonalization summary; cached inside the handle. Fails with
 * UVQE_ERR_GAPLESS_SPECTRUM when every energy sits at the ground level. */
uvqe_status uvqe_hamiltonian_spectrum(const uvqe_hamiltonian* h,
                                      uvqe_spectrum_info* out);

/* ------------------------------------------------------------------ */
/* Circuits                                                            */

typedef struct uvqe_circuit uvqe_circuit;

/* Identity layers over reference state e_0. */
uvqe_status uvqe_circuit_identity(int qubits, int num_layers,
                                  uvqe_circuit** out);

/* Small-angle random Pauli-rotation layers exp(-i theta_h P_h) with
 * theta_h ~ N(0, sigma^2) and uniformly random strings P_h; reference e_0. */
uvqe_status uvqe_circuit_random_pauli_init(int qubits, int num_layers,
                                           double sigma, uint64_t seed,
                                           uvqe_circuit** out);

uvqe_status uvqe_circuit_clone(const uvqe_circuit* c, uvqe_circuit** out);
void uvqe_circuit_destroy(uvqe_circuit* c);
int uvqe_circuit_depth(const uvqe_circuit* c);
int uvqe_circuit_dim(const uvqe_circuit* c);

/* Exact objective <phi_0| U^dagger H U |phi_0| for the circuit product. */
uvqe_status uvqe_energy(const uvqe_hamiltonian* h, const uvqe_circuit* c,
                        double* out);

/* ------------------------------------------------------------------ */
/* Optimization                                                        */

typedef struct {
  long max_iters;
  double step_size;   /* <= 0 selects 1 / ((8N+1) ||H||) */
  double grad_tol;    /* stop when the summed squared gradient < tol^2 */
  double gap_tol;     /* stop when f - E_0 < tol; 0 disables  */
  long record_every;
} uvqe_opt_config;

void uvqe_opt_config_init(uvqe_opt_config* cfg);

typedef struct uvqe_trace uvqe_trace;

/* Riemannian gradient descent over all circuit layers (simultaneous layer
 * updates, polar retraction). */
uvqe_status uvqe_rgd_run(const uvqe_hamiltonian* h, const uvqe_circuit* start,
                         const uvqe_opt_config* cfg, uvqe_trace** out);

int uvqe_trace_size(const uvqe_trace* t);
long uvqe_trace_iterations(const uvqe_trace* t);
int uvqe_trace_converged(const uvqe_trace* t);
int uvqe_trace_step_warning(const uvqe_trace* t);

/* Record row i: iteration, objective gap f - E_0, summed squared gradient
 * norm, and the ratio gap_{t+1}/gap_t (NaN when no next iterate exists). */
uvqe_status uvqe_trace_row(const uvqe_trace* t, int i, long* iteration,
                           double* objective_gap, double* grad_norm_sq,
                           double* certificate_ratio);

/* Clone of the final iterate. */
uvqe_status uvqe_trace_final_circuit(const uvqe_trace* t, uvqe_circuit** out);

void uvqe_trace_destroy(uvqe_trace* t);

double uvqe_default_step_size(double h_norm, int num_layers);
uvqe_status uvqe_theoretical_rate(double gap, double h_norm, double mu,
                                  double* out);
int uvqe_in_basin(double objective_gap, double gap);
long uvqe_required_depth(long d_target, long p);

/* ------------------------------------------------------------------ */
/* Initialization bounds                                               */

typedef struct {
  double ref_energy;    /* <phi_0| H |phi_0> */
  double ground_energy; /* E_0 */
  double h_norm;        /* ||H|| */
  double gap;
  int layers;
  double sigma;
  double delta; /* failure probability */
} uvqe_init_bound_inputs;

/* High-probability bound on the random-initialization objective gap. */
uvqe_status uvqe_init_error_bound(const uvqe_init_bound_inputs* in,
                                  double* out);

/* Feasible interval of sigma^2 for entering the convergence basin with the
 * bound split c1 + c2 + c3 = 1/2; *empty is set when no value works. */
uvqe_status uvqe_feasible_sigma_interval(const uvqe_init_bound_inputs* in,
                                         double c1, double c2, double c3,
                                         double* lo, double* hi, int* empty);

/* ------------------------------------------------------------------ */
/* Finite-shot measurement                                             */

/* Equal split of the budget with the remainder on the first terms. */
uvqe_status uvqe_uniform_allocation(int terms, long total, long* out);

/* Shots proportional to |alpha_k|, rounded by largest remainder with a floor
 * of one shot per term. */
uvqe_status uvqe_adaptive_allocation(const double* coefficients, int terms,
                                     long total, long* out);

/* sqrt(2 log(1/gamma)) * sqrt(sum_k alpha_k^2 / M_k). */
uvqe_status uvqe_statistical_error_bound(const double* coefficients,
                                         const long* shots, int terms,
                                         double gamma, double* out);

/* Finite-shot estimate of the objective: per-term binomial frequencies
 * combined with the coefficients. */
uvqe_status uvqe_sample_noisy_energy(const uvqe_hamiltonian* h,
                                     const uvqe_circuit* c, const long* shots,
                                     uvqe_rng* rng, double* out);

/* ------------------------------------------------------------------ */
/* Landscape                                                           */

typedef struct {
  int level;
  double energy;
  int is_minimum;       /* 1 global minimum, 0 strict saddle */
  double grad_norm;     /* Frobenius norm of the Riemannian gradient */
  double witness_value; /* negative Hessian value at the witness; NaN for
                           minima */
} uvqe_critical_point_info;

/* Fills one record per eigenlevel (dim records, reference state e_0). */
uvqe_status uvqe_landscape(const uvqe_hamiltonian* h,
                           uvqe_critical_point_info* out, int cap,
                           int* count);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* UVQE_H */
