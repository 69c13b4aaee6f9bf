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

#include "spindir/optimal_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace spindir {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Number of eigenvalues of the tridiagonal matrix strictly below x, from the
/// sign count of the Sturm factorization pivots.
int sturm_count_below(const std::vector<double>& diag, const std::vector<double>& offdiag_sq,
                      double x) {
    const double pivmin = std::numeric_limits<double>::min();
    int count = 0;
    double q = diag[0] - x;
    if (q < 0.0) {
        ++count;
    }
    for (std::size_t i = 1; i < diag.size(); ++i) {
        if (std::abs(q) < pivmin) {
            q = -pivmin;
        }
        q = diag[i] - x - offdiag_sq[i - 1] / q;
        if (q < 0.0) {
            ++count;
        }
    }
    return count;
}

/// Solves (T - shift I) y = b by Gaussian elimination with partial pivoting
/// (one extra superdiagonal of fill). Zero pivots are nudged so the solve can
/// serve as an inverse-iteration step at a near-exact eigenvalue shift.
std::vector<double> solve_shifted(const std::vector<double>& diag,
                                  const std::vector<double>& offdiag, double shift,
                                  std::vector<double> b, double pivot_floor) {
    const int n = static_cast<int>(diag.size());
    std::vector<double> dl(offdiag), dd(n), du(n, 0.0), du2(n, 0.0);
    for (int i = 0; i < n; ++i) {
        dd[i] = diag[i] - shift;
    }
    for (int i = 0; i + 1 < n; ++i) {
        du[i] = offdiag[i];
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(dd[i]) >= std::abs(dl[i])) {
            if (std::abs(dd[i]) < pivot_floor) {
                dd[i] = (dd[i] < 0.0 ? -pivot_floor : pivot_floor);
            }
            const double mult = dl[i] / dd[i];
            dd[i + 1] -= mult * du[i];
            b[i + 1] -= mult * b[i];
            dl[i] = 0.0;
        } else {
            // Swap rows i and i+1; the swap brings in a second superdiagonal.
            const double mult = dd[i] / dl[i];
            std::swap(dd[i], dl[i]);
            const double tmp_du = du[i];
            du[i] = dd[i + 1];
            dd[i + 1] = tmp_du - mult * dd[i + 1];
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -mult * du[i + 1];
            }
            std::swap(b[i], b[i + 1]);
            b[i + 1] -= mult * b[i];
            dl[i] = 0.0;
        }
    }
    if (std::abs(dd[n - 1]) < pivot_floor) {
        dd[n - 1] = (dd[n - 1] < 0.0 ? -pivot_floor : pivot_floor);
    }
    std::vector<double> y(n);
    y[n - 1] = b[n - 1] / dd[n - 1];
    if (n >= 2) {
        y[n - 2] = (b[n - 2] - du[n - 2] * y[n - 1]) / dd[n - 2];
    }
    for (int i = n - 3; i >= 0; --i) {
        y[i] = (b[i] - du[i] * y[i + 1] - du2[i] * y[i + 2]) / dd[i];
    }
    return y;
}

double rayleigh_quotient(const std::vector<double>& diag, const std::vector<double>& offdiag,
                         const std::vector<double>& v) {
    double acc = 0.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        acc += diag[i] * v[i] * v[i];
    }
    for (std::size_t i = 0; i < offdiag.size(); ++i) {
        acc += 2.0 * offdiag[i] * v[i] * v[i + 1];
    }
    return acc;
}

double residual_inf_norm(const std::vector<double>& diag, const std::vector<double>& offdiag,
                         const std::vector<double>& v, double lambda) {
    const int n = static_cast<int>(diag.size());
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = (diag[i] - lambda) * v[i];
        if (i > 0) {
            r += offdiag[i - 1] * v[i - 1];
        }
        if (i + 1 < n) {
            r += offdiag[i] * v[i + 1];
        }
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

FidelityResult result_from_eigenpair(const ProblemSpec& spec, Eigenpair pair) {
    SignalState state{spec, std::move(pair.vector), pair.value};
    const double fidelity = 0.5 * (1.0 + state.mean_x);
    return FidelityResult{spec, std::move(state), fidelity, 1.0 - fidelity};
}

}  // namespace

double CouplingMatrix::inf_norm() const {
    double worst = 0.0;
    for (int i = 0; i < dim(); ++i) {
        double row = std::abs(diag[i]);
        if (i > 0) {
            row += std::abs(offdiag[i - 1]);
        }
        if (i + 1 < dim()) {
            row += std::abs(offdiag[i]);
        }
        worst = std::max(worst, row);
    }
    return worst;
}

CouplingMatrix build_coupling_matrix(const ProblemSpec& spec) {
    const int size = spec.ladder_size();
    const double m_sq = 0.25 * spec.m.twice() * spec.m.twice();
    CouplingMatrix mat{spec, std::vector<double>(size), std::vector<double>(size - 1)};
    for (int i = 0; i < size; ++i) {
        const int tj = spec.j_at(i).twice();
        // The j = 0 entry (possible only at m = 0) is the 0/0 limit, which is 0.
        mat.diag[i] = tj == 0 ? 0.0 : m_sq / (0.25 * tj * (tj + 2));
    }
    for (int i = 0; i + 1 < size; ++i) {
        const double j = 0.5 * spec.j_at(i + 1).twice();
        mat.offdiag[i] = (j * j - m_sq) / (j * std::sqrt(4.0 * j * j - 1.0));
    }
    return mat;
}

Eigenpair largest_eigenpair(const CouplingMatrix& mat, double rel_tol) {
    if (rel_tol <= 0.0) {
        throw InvalidArgumentError("largest_eigenpair: rel_tol must be positive");
    }
    const int n = mat.dim();
    if (n < 1) {
        throw InvalidArgumentError("largest_eigenpair: empty matrix");
    }
    if (static_cast<int>(mat.offdiag.size()) != n - 1) {
        throw InvalidArgumentError("largest_eigenpair: inconsistent matrix dimensions");
    }
    if (n == 1) {
        return Eigenpair{mat.diag[0], {1.0}};
    }

    const auto& d = mat.diag;
    const auto& e = mat.offdiag;
    const double scale = std::max(mat.inf_norm(), std::numeric_limits<double>::min());

    std::vector<double> e_sq(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e_sq[i] = e[i] * e[i];
    }

    // Gershgorin bracket for the whole spectrum.
    double lo = d[0] - e[0];
    double hi = d[0] + e[0];
    for (int i = 1; i < n; ++i) {
        const double radius = e[i - 1] + (i + 1 < n ? e[i] : 0.0);
        lo = std::min(lo, d[i] - radius);
        hi = std::max(hi, d[i] + radius);
    }
    hi += 2.0 * kEps * scale;

    // Bisect for the n-th (largest) eigenvalue.
    const double width_target = std::min(rel_tol, 1e-13) * scale;
    int iterations = 0;
    while (hi - lo > width_target) {
        if (++iterations > 300) {
            throw NoConvergenceError("largest_eigenpair: bisection iteration cap hit");
        }
        const double mid = 0.5 * (lo + hi);
        if (sturm_count_below(d, e_sq, mid) >= n) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    double lambda = 0.5 * (lo + hi);

    // The Perron root of this irreducible non-negative matrix is simple;
    // anything else signals a broken matrix, so refuse to pick a vector.
    const double gap_window = std::max(50.0 * (hi - lo), 1e-12 * scale);
    if (n - sturm_count_below(d, e_sq, lambda - gap_window) > 1) {
        throw NoConvergenceError("largest_eigenpair: top eigenvalue is numerically degenerate");
    }

    // Inverse iteration with a Rayleigh-quotient polish of the eigenvalue.
    const double pivot_floor = kEps * scale;
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    double best_residual = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 8; ++iter) {
        std::vector<double> y = solve_shifted(d, e, lambda, v, pivot_floor);
        double norm = 0.0;
        for (double value : y) {
            norm += value * value;
        }
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            throw NoConvergenceError("largest_eigenpair: inverse iteration broke down");
        }
        for (int i = 0; i < n; ++i) {
            v[i] = y[i] / norm;
        }
        lambda = rayleigh_quotient(d, e, v);
        best_residual = residual_inf_norm(d, e, v, lambda);
        if (best_residual <= rel_tol * scale) {
            break;
        }
    }
    if (best_residual > rel_tol * scale) {
        throw NoConvergenceError("largest_eigenpair: residual " + std::to_string(best_residual) +
                                 " above tolerance");
    }

    // Perron sign convention: flip so the dominant component is positive,
    // then zero out any negative round-off dust.
    int dominant = 0;
    for (int i = 1; i < n; ++i) {
        if (std::abs(v[i]) > std::abs(v[dominant])) {
            dominant = i;
        }
    }
    if (v[dominant] < 0.0) {
        for (double& value : v) {
            value = -value;
        }
    }
    for (double& value : v) {
        if (value < 0.0) {
            if (value < -1e-12) {
                throw NoConvergenceError(
                    "largest_eigenpair: eigenvector has a significant negative component");
            }
            value = 0.0;
        }
    }
    return Eigenpair{lambda, std::move(v)};
}

FidelityResult optimal_fidelity(const ProblemSpec& spec) {
    return result_from_eigenpair(spec, largest_eigenpair(build_coupling_matrix(spec)));
}

FidelityResult optimal_fidelity(int n_spins) {
    return optimal_fidelity(validate_spec(n_spins, lowest_m(n_spins)));
}

FidelityResult parallel_spin_fidelity(int n_spins) {
    return optimal_fidelity(validate_spec(n_spins, HalfInt::from_twice(n_spins)));
}

std::vector<FidelityResult> fidelity_sweep(int n_min, int n_max, SweepMode mode) {
    if (n_min < 1) {
        throw BadNError("fidelity_sweep: n_min must be >= 1");
    }
    if (n_max < n_min) {
        throw InvalidArgumentError("fidelity_sweep: n_max must be >= n_min");
    }
    std::vector<FidelityResult> results;
    results.reserve(n_max - n_min + 1);
    for (int n = n_min; n <= n_max; ++n) {
        results.push_back(mode == SweepMode::optimal ? optimal_fidelity(n)
                                                     : parallel_spin_fidelity(n));
    }
    return results;
}

}  // namespace spindir
