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

#include "spindir/errors.hpp"
#include "spindir/half_int.hpp"

namespace spindir {

/// A signal family: N spin-1/2 particles prepared with a single projection
/// quantum number m onto the transmitted axis, carrying total-spin components
/// j = m, m+1, ..., N/2 (each j once).
///
/// Valid specs satisfy N >= 1, 0 <= m <= N/2, and 2m == N (mod 2).
struct ProblemSpec {
    int n_spins = 0;
    HalfInt m;

    /// Number of j values in the ladder (K + 1 where K = N/2 - m).
    int ladder_size() const { return (n_spins - m.twice()) / 2 + 1; }

    /// j value at ladder index i (index 0 is j = m, last index is j = N/2).
    HalfInt j_at(int index) const { return HalfInt::from_twice(m.twice() + 2 * index); }
};

/// Validates (n_spins, m) and returns the spec.
/// Throws BadNError, ParityMismatchError or OutOfRangeError.
ProblemSpec validate_spec(int n_spins, HalfInt m);

/// The smallest m allowed for N spins: 0 for even N, 1/2 for odd N.
HalfInt lowest_m(int n_spins);

/// Dimension of the accessible Hilbert space, sum of (2j+1) over the ladder
/// starting at the lowest m: (N+2)^2/4 for even N, (N+1)(N+3)/4 for odd N.
long long hilbert_dimension(int n_spins);

/// A normalized signal state: coefficients c_j over the ladder of `spec`
/// (index 0 is j = m) plus its mean direction cosine <x>.
///
/// Producers guarantee sum c_j^2 = 1, all c_j >= 0 (the leading eigenvector
/// of the coupling matrix can always be chosen non-negative), and mean_x
/// equal to the Rayleigh quotient of the coefficients under the coupling
/// matrix of `spec`.
struct SignalState {
    ProblemSpec spec;
    std::vector<double> coeffs;
    double mean_x = 0.0;
};

/// Transmission fidelity F = (1 + <x>)/2 for a signal state. 1 - F is the
/// mean square error of the indicated direction.
struct FidelityResult {
    ProblemSpec spec;
    SignalState state;
    double fidelity = 0.0;
    double one_minus_f = 0.0;
};

}  // namespace spindir
