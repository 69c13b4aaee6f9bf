/* Copyright 2026 The spindir Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of libspindir.
 *
 * Every computation returns a status code (SPINDIR_OK on success) and hands
 * results back through opaque handles with typed getters. Handles are freed
 * with the matching *_free function; freeing NULL is a no-op. Half-integer
 * quantum numbers cross this boundary as twice their value (twice_m), so m =
 * 1/2 is twice_m = 1. Passing twice_m = SPINDIR_LOWEST_M selects the smallest
 * m legal for the given N (0 for even N, 1/2 for odd N).
 */

#ifndef SPINDIR_SPINDIR_H
#define SPINDIR_SPINDIR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SPINDIR_OK 0
#define SPINDIR_E_BAD_N 1
#define SPINDIR_E_PARITY_MISMATCH 2
#define SPINDIR_E_OUT_OF_RANGE 3
#define SPINDIR_E_NO_CONVERGENCE 4
#define SPINDIR_E_ENVELOPE_BREACH 5
#define SPINDIR_E_UNSUPPORTED 6
#define SPINDIR_E_INVALID_ARGUMENT 7
#define SPINDIR_E_INTERNAL 8

#define SPINDIR_LOWEST_M (-1)

const char* spindir_version(void);

/* Stable name of a status code, e.g. "ParityMismatch". */
const char* spindir_error_name(int code);

/* Human-readable message of the most recent failure on this thread. The
 * returned pointer stays valid until the next failing call on the thread. */
const char* spindir_last_error_message(void);

/* ---- plain queries ---- */

/* Dimension of the accessible Hilbert space for N spins. */
int spindir_hilbert_dimension(int n_spins, long long* out_dim);

/* Smallest legal twice_m for N spins (N mod 2). */
int spindir_lowest_twice_m(int n_spins, int* out_twice_m);

/* Validates (n_spins, twice_m) without computing anything. */
int spindir_validate(int n_spins, int twice_m);

/* ---- optimal state and fidelity ---- */

typedef struct spindir_fidelity_result spindir_fidelity_result;

/* Optimal signal state for the (n_spins, twice_m) family: coefficients are
 * the leading eigenvector of the coupling matrix, F = (1 + lambda_max)/2. */
int spindir_optimal_fidelity(int n_spins, int twice_m, spindir_fidelity_result** out);

/* All-parallel baseline (m = N/2), F = (N+1)/(N+2). */
int spindir_parallel_fidelity(int n_spins, spindir_fidelity_result** out);

void spindir_fidelity_result_free(spindir_fidelity_result* result);

int spindir_fidelity_result_n(const spindir_fidelity_result* result);
int spindir_fidelity_result_twice_m(const spindir_fidelity_result* result);
double spindir_fidelity_result_fidelity(const spindir_fidelity_result* result);
double spindir_fidelity_result_one_minus_f(const spindir_fidelity_result* result);
double spindir_fidelity_result_mean_x(const spindir_fidelity_result* result);
int spindir_fidelity_result_coeff_count(const spindir_fidelity_result* result);
/* Coefficient c_j at ladder index `index` (0 is j = m). Out-of-range indices
 * return 0. */
double spindir_fidelity_result_coeff(const spindir_fidelity_result* result, int index);

/* ---- Monte Carlo protocol simulation ---- */

typedef struct spindir_simulation_report spindir_simulation_report;

/* Runs `shots` protocol rounds with the exact outcome density of the optimal
 * (n_spins, twice_m) state. Deterministic for fixed arguments. */
int spindir_simulate(int n_spins, int twice_m, uint64_t shots, uint64_t seed,
                     spindir_simulation_report** out);

void spindir_simulation_report_free(spindir_simulation_report* report);

int spindir_simulation_report_n(const spindir_simulation_report* report);
int spindir_simulation_report_twice_m(const spindir_simulation_report* report);
uint64_t spindir_simulation_report_shots(const spindir_simulation_report* report);
uint64_t spindir_simulation_report_seed(const spindir_simulation_report* report);
double spindir_simulation_report_estimate(const spindir_simulation_report* report);
double spindir_simulation_report_standard_error(const spindir_simulation_report* report);
double spindir_simulation_report_exact_fidelity(const spindir_simulation_report* report);
double spindir_simulation_report_accepted_fraction(const spindir_simulation_report* report);

/* ---- numerical verification ---- */

typedef struct spindir_verification_report spindir_verification_report;

/* Runs the coupling-matrix reconstruction, density-normalization and
 * measurement-completeness checks. quad_order = 0 selects defaults.
 * Returns SPINDIR_E_UNSUPPORTED for n_spins > 20. */
int spindir_verify(int n_spins, int twice_m, int quad_order, spindir_verification_report** out);

void spindir_verification_report_free(spindir_verification_report* report);

int spindir_verification_report_n(const spindir_verification_report* report);
int spindir_verification_report_twice_m(const spindir_verification_report* report);
double spindir_verification_report_coupling_dev(const spindir_verification_report* report);
double spindir_verification_report_density_dev(const spindir_verification_report* report);
double spindir_verification_report_gram_dev(const spindir_verification_report* report);
int spindir_verification_report_gram_dim(const spindir_verification_report* report);
/* 1 if every deviation is within its documented tolerance, else 0. */
int spindir_verification_report_passed(const spindir_verification_report* report);
double spindir_verification_coupling_tol(void);
double spindir_verification_density_tol(void);
double spindir_verification_gram_tol(void);

#ifdef __cplusplus
}
#endif

#endif /* SPINDIR_SPINDIR_H */
