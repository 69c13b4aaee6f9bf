// Copyright 2026 The spindir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spindir/spindir.h"

#include <exception>
#include <string>

#include "spindir/asymptotics.hpp"
#include "spindir/optimal_state.hpp"
#include "spindir/povm_check.hpp"
#include "spindir/simulate.hpp"
#include "spindir/types.hpp"

struct spindir_fidelity_result {
    spindir::FidelityResult value;
};

struct spindir_simulation_report {
    spindir::SimulationReport value;
};

struct spindir_verification_report {
    spindir::VerificationReport value;
};

namespace {

thread_local std::string g_last_error;

int record_failure(int code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return SPINDIR_OK;
    } catch (const spindir::Error& err) {
        return record_failure(static_cast<int>(err.code()), err.what());
    } catch (const std::exception& err) {
        return record_failure(SPINDIR_E_INTERNAL, err.what());
    } catch (...) {
        return record_failure(SPINDIR_E_INTERNAL, "unknown failure");
    }
}

spindir::HalfInt resolve_m(int n_spins, int twice_m) {
    if (twice_m == SPINDIR_LOWEST_M) {
        return spindir::lowest_m(n_spins);
    }
    return spindir::HalfInt::from_twice(twice_m);
}

}  // namespace

extern "C" {

const char* spindir_version(void) {
    return "0.1.0";
}

const char* spindir_error_name(int code) {
    return spindir::error_code_name(static_cast<spindir::ErrorCode>(code));
}

const char* spindir_last_error_message(void) {
    return g_last_error.c_str();
}

int spindir_hilbert_dimension(int n_spins, long long* out_dim) {
    if (out_dim == nullptr) {
        return record_failure(SPINDIR_E_INVALID_ARGUMENT, "out_dim is NULL");
    }
    return guarded([&] { *out_dim = spindir::hilbert_dimension(n_spins); });
}

int spindir_lowest_twice_m(int n_spins, int* out_twice_m) {
    if (out_twice_m == nullptr) {
        return record_failure(SPINDIR_E_INVALID_ARGUMENT, "out_twice_m is NULL");
    }
    return guarded([&] { *out_twice_m = spindir::lowest_m(n_spins).twice(); });
}

int spindir_validate(int n_spins, int twice_m) {
    return guarded([&] { spindir::validate_spec(n_spins, resolve_m(n_spins, twice_m)); });
}

int spindir_optimal_fidelity(int n_spins, int twice_m, spindir_fidelity_result** out) {
    if (out == nullptr) {
        return record_failure(SPINDIR_E_INVALID_ARGUMENT, "out is NULL");
    }
    *out = nullptr;
    return guarded([&] {
        const spindir::ProblemSpec spec =
            spindir::validate_spec(n_spins, resolve_m(n_spins, twice_m));
        *out = new spindir_fidelity_result{spindir::optimal_fidelity(spec)};
    });
}

int spindir_parallel_fidelity(int n_spins, spindir_fidelity_result** out) {
    if (out == nullptr) {
        return record_failure(SPINDIR_E_INVALID_ARGUMENT, "out is NULL");
    }
    *out = nullptr;
    return guarded([&] { *out = new spindir_fidelity_result{spindir::parallel_spin_fidelity(n_spins)}; });
}

void spindir_fidelity_result_free(spindir_fidelity_result* result) {
    delete result;
}

int spindir_fidelity_result_n(const spindir_fidelity_result* result) {
    return result->value.spec.n_spins;
}

int spindir_fidelity_result_twice_m(const spindir_fidelity_result* result) {
    return result->value.spec.m.twice();
}

double spindir_fidelity_result_fidelity(const spindir_fidelity_result* result) {
    return result->value.fidelity;
}

double spindir_fidelity_result_one_minus_f(const spindir_fidelity_result* result) {
    return result->value.one_minus_f;
}

double spindir_fidelity_result_mean_x(const spindir_fidelity_result* result) {
    return result->value.state.mean_x;
}

int spindir_fidelity_result_coeff_count(const spindir_fidelity_result* result) {
    return static_cast<int>(result->value.state.coeffs.size());
}

double spindir_fidelity_result_coeff(const spindir_fidelity_result* result, int index) {
    if (index < 0 || index >= spindir_fidelity_result_coeff_count(result)) {
        return 0.0;
    }
    return result->value.state.coeffs[static_cast<std::size_t>(index)];
}

int spindir_simulate(int n_spins, int twice_m, uint64_t shots, uint64_t seed,
                     spindir_simulation_report** out) {
    if (out == nullptr) {
        return record_failure(SPINDIR_E_INVALID_ARGUMENT, "out is NULL");
    }
    *out = nullptr;
    return guarded([&] {
        const spindir::ProblemSpec spec =
            spindir::validate_spec(n_spins, resolve_m(n_spins, twice_m));
        spindir::SamplerConfig config;
        config.seed = seed;
        config.shots = shots;
        *out = new spindir_simulation_report{spindir::simulate_protocol(spec, config)};
    });
}

void spindir_simulation_report_free(spindir_simulation_report* report) {
    delete report;
}

int spindir_simulation_report_n(const spindir_simulation_report* report) {
    return report->value.spec.n_spins;
}

int spindir_simulation_report_twice_m(const spindir_simulation_report* report) {
    return report->value.spec.m.twice();
}

uint64_t spindir_simulation_report_shots(const spindir_simulation_report* report) {
    return report->value.config.shots;
}

uint64_t spindir_simulation_report_seed(const spindir_simulation_report* report) {
    return report->value.config.seed;
}

double spindir_simulation_report_estimate(const spindir_simulation_report* report) {
    return report->value.mean_fidelity_estimate;
}

double spindir_simulation_report_standard_error(const spindir_simulation_report* report) {
    return report->value.standard_error;
}

double spindir_simulation_report_exact_fidelity(const spindir_simulation_report* report) {
    return report->value.exact_fidelity;
}

double spindir_simulation_report_accepted_fraction(const spindir_simulation_report* report) {
    return report->value.accepted_fraction;
}

int spindir_verify(int n_spins, int twice_m, int quad_order, spindir_verification_report** out) {
    if (out == nullptr) {
        return record_failure(SPINDIR_E_INVALID_ARGUMENT, "out is NULL");
    }
    *out = nullptr;
    return guarded([&] {
        *out = new spindir_verification_report{
            spindir::verify_protocol(n_spins, resolve_m(n_spins, twice_m), quad_order)};
    });
}

void spindir_verification_report_free(spindir_verification_report* report) {
    delete report;
}

int spindir_verification_report_n(const spindir_verification_report* report) {
    return report->value.n_spins;
}

int spindir_verification_report_twice_m(const spindir_verification_report* report) {
    return report->value.twice_m;
}

double spindir_verification_report_coupling_dev(const spindir_verification_report* report) {
    return report->value.coupling_dev;
}

double spindir_verification_report_density_dev(const spindir_verification_report* report) {
    return report->value.density_dev;
}

double spindir_verification_report_gram_dev(const spindir_verification_report* report) {
    return report->value.gram_dev;
}

int spindir_verification_report_gram_dim(const spindir_verification_report* report) {
    return report->value.gram_dim;
}

int spindir_verification_report_passed(const spindir_verification_report* report) {
    return report->value.passed ? 1 : 0;
}

double spindir_verification_coupling_tol(void) {
    return spindir::VerificationReport::coupling_tol;
}

double spindir_verification_density_tol(void) {
    return spindir::VerificationReport::density_tol;
}

double spindir_verification_gram_tol(void) {
    return spindir::VerificationReport::gram_tol;
}

}  // extern "C"
