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

/// Large-N behaviour of the best achievable error: 1 - F falls like
/// 5.78317/(N+3)^2, so scaled(N) = (1-F)(N+3)^2 converges to a constant.
struct AsymptoteReport {
    std::vector<int> n_values;
    std::vector<double> one_minus_f;
    std::vector<double> scaled;  // (1 - F) * (N + 3)^2
    /// Limit of scaled(N) from a c + a/N + b/N^2 fit through the largest
    /// three distinct N (fewer fit terms if fewer points are given). The fit
    /// form is a modeling choice; it interpolates the fit points exactly.
    double extrapolated_constant = 0.0;
};

/// Evaluates the lowest-m optimal fidelity for each N in n_list and
/// extrapolates the scaled error constant. Deterministic for a fixed list.
AsymptoteReport asymptote_sweep(const std::vector<int>& n_list);

struct Figure1Row {
    int n_spins = 0;
    double one_minus_f_optimal = 0.0;
    double one_minus_f_parallel = 0.0;  // 1/(N+2)
};

/// Error-versus-N table for the optimal (lowest m) and all-parallel signal
/// families, N = 1..n_max. Requires n_max >= 2.
std::vector<Figure1Row> figure1_data(int n_max);

}  // namespace spindir
