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

#pragma once

#include <vector>

#include "spindir/optimal_state.hpp"
#include "spindir/orthopoly.hpp"
#include "spindir/types.hpp"

namespace spindir {

/// Measurement outcome density in x = cos(chi), the cosine of the angle
/// between the true and the indicated direction:
///   p(x) = 1/2 | sum_j c_j sqrt(2j+1) ((1+x)/2)^m P^(0,2m)_{j-m}(x) |^2.
/// Non-negative, and integrates to 1 over [-1, 1] for a normalized state.
double density_eval(const SignalState& state, double x);

/// Integral of p(x) over [-1, 1] under `rule`; equals 1 for normalized states
/// once rule.order covers the polynomial degree (N + 2 suffices).
double density_normalization(const SignalState& state, const QuadratureRule& rule);

/// Integral of x p(x), the quadrature route to <x>. Must reproduce
/// state.mean_x, which comes from the eigenvalue route.
double density_mean_x(const SignalState& state, const QuadratureRule& rule);

/// Dense (K+1)x(K+1) matrix of 1/2 int x f_j(x) f_k(x) dx computed by
/// quadrature, where f_j is the signal amplitude of ladder entry j. This is
/// the independent reconstruction of the coupling matrix: it must match
/// build_coupling_matrix entrywise, with entries beyond the tridiagonal band
/// vanishing. Requires rule.order >= N + 4.
std::vector<std::vector<double>> coupling_matrix_oracle(const ProblemSpec& spec,
                                                        const QuadratureRule& rule);

/// Gram matrix of the measurement resolution over the accessible space,
/// rows/columns indexed by basis pairs (j, mu) with j = m..N/2 and
/// |mu| <= j:
///   G[(j1,mu), (j2,mu)] = sqrt((2j1+1)(2j2+1))/2
///                         * int_0^pi d^(j1)_{m,mu} d^(j2)_{m,mu} sin(theta) dtheta.
/// Entries with differing mu vanish identically (the azimuthal integral is a
/// Kronecker delta) and are asserted structurally, not integrated. A complete
/// measurement yields the identity matrix.
std::vector<std::vector<double>> povm_completeness_gram(int n_spins, HalfInt m,
                                                        const QuadratureRule& rule);

/// Default quadrature order for density and coupling-matrix integrals (N + 8,
/// comfortably above the integrand degree N + 1).
int default_density_order(int n_spins);

/// Default quadrature order for the Gram integrals (2N + 16).
int default_gram_order(int n_spins);

/// Bundle of the three independent checks run by `verify_protocol`.
struct VerificationReport {
    int n_spins = 0;
    int twice_m = 0;
    double coupling_dev = 0.0;  // max |quadrature matrix - closed form|
    double density_dev = 0.0;   // |integral of p - 1| for the optimal state
    double gram_dev = 0.0;      // max |G - I|
    int gram_dim = 0;
    bool passed = false;

    static constexpr double coupling_tol = 1e-10;
    static constexpr double density_tol = 1e-10;
    static constexpr double gram_tol = 1e-9;
    static constexpr int max_gram_spins = 20;
};

/// Runs the coupling-matrix reconstruction, density normalization and Gram
/// completeness checks for (n_spins, m). quad_order = 0 selects the defaults;
/// an explicit order must be at least N + 4 and is doubled for the Gram
/// integrals. Throws UnsupportedError for n_spins > max_gram_spins.
VerificationReport verify_protocol(int n_spins, HalfInt m, int quad_order = 0);

}  // namespace spindir
