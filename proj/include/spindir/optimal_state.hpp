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

#include "spindir/types.hpp"

namespace spindir {

/// Real symmetric tridiagonal coupling matrix A whose quadratic form in the
/// signal coefficients is the mean direction cosine <x>:
///   A_jj      = m^2 / (j(j+1))          (0 at j = 0 by the m = 0 limit)
///   A_{j,j-1} = (j^2 - m^2) / (j sqrt(4j^2 - 1))
/// Rows/columns follow the ladder ordering of ProblemSpec (index 0 is j = m).
struct CouplingMatrix {
    ProblemSpec spec;
    std::vector<double> diag;     // ladder_size() entries
    std::vector<double> offdiag;  // ladder_size() - 1 entries, all > 0

    int dim() const { return static_cast<int>(diag.size()); }
    double inf_norm() const;
};

CouplingMatrix build_coupling_matrix(const ProblemSpec& spec);

struct Eigenpair {
    double value = 0.0;
    std::vector<double> vector;  // unit 2-norm, all components >= 0
};

/// Largest eigenpair of the coupling matrix by Sturm-sequence bisection plus
/// inverse iteration, with a Rayleigh-quotient polish of the eigenvalue.
/// Guarantees ||A v - lambda v||_inf <= rel_tol * ||A||_inf on return and
/// applies the non-negative (Perron) sign convention to the eigenvector.
/// Throws NoConvergenceError on iteration-cap breach or if the top eigenvalue
/// is numerically degenerate.
Eigenpair largest_eigenpair(const CouplingMatrix& mat, double rel_tol = 1e-12);

/// Optimal signal state and fidelity for a given (N, m) family: coefficients
/// are the leading eigenvector of the coupling matrix, <x> its eigenvalue,
/// and F = (1 + <x>)/2.
FidelityResult optimal_fidelity(const ProblemSpec& spec);

/// Same, with m defaulted to the lowest legal value (0 or 1/2), which is the
/// best choice for every N.
FidelityResult optimal_fidelity(int n_spins);

/// The all-parallel baseline m = j = N/2. The coupling matrix reduces to the
/// scalar (N/2)/(N/2 + 1), so F = (N+1)/(N+2).
FidelityResult parallel_spin_fidelity(int n_spins);

enum class SweepMode { optimal, parallel };

/// One FidelityResult per N in [n_min, n_max]. Results are independent per N.
std::vector<FidelityResult> fidelity_sweep(int n_min, int n_max, SweepMode mode);

}  // namespace spindir
