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

#include "spindir/povm_check.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace spindir {

namespace {

/// Amplitude contribution of ladder entry i at outcome x:
/// f_i(x) = sqrt(2j+1) * ((1+x)/2)^m * P^(0,2m)_{j-m}(x).
std::vector<double> amplitude_terms(const ProblemSpec& spec, double x) {
    const int size = spec.ladder_size();
    const int tm = spec.m.twice();
    const double envelope = std::pow(0.5 * (1.0 + x), 0.5 * tm);
    std::vector<double> terms(size);
    for (int i = 0; i < size; ++i) {
        const int tj = spec.j_at(i).twice();
        terms[i] = std::sqrt(tj + 1.0) * envelope * jacobi_poly(i, 0, tm, x);
    }
    return terms;
}

void check_state(const SignalState& state) {
    if (static_cast<int>(state.coeffs.size()) != state.spec.ladder_size()) {
        throw InvalidArgumentError("signal state has " + std::to_string(state.coeffs.size()) +
                                   " coefficients for a ladder of size " +
                                   std::to_string(state.spec.ladder_size()));
    }
}

}  // namespace

double density_eval(const SignalState& state, double x) {
    check_state(state);
    const std::vector<double> terms = amplitude_terms(state.spec, x);
    double amplitude = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        amplitude += state.coeffs[i] * terms[i];
    }
    return 0.5 * amplitude * amplitude;
}

double density_normalization(const SignalState& state, const QuadratureRule& rule) {
    return rule.integrate([&](double x) { return density_eval(state, x); });
}

double density_mean_x(const SignalState& state, const QuadratureRule& rule) {
    return rule.integrate([&](double x) { return x * density_eval(state, x); });
}

std::vector<std::vector<double>> coupling_matrix_oracle(const ProblemSpec& spec,
                                                        const QuadratureRule& rule) {
    if (rule.order < spec.n_spins + 4) {
        throw InvalidArgumentError("coupling_matrix_oracle: quadrature order must be >= N + 4");
    }
    const int size = spec.ladder_size();
    std::vector<std::vector<double>> mat(size, std::vector<double>(size, 0.0));
    for (int k = 0; k < rule.order; ++k) {
        const double x = rule.nodes[k];
        const double w = rule.weights[k];
        const std::vector<double> terms = amplitude_terms(spec, x);
        for (int a = 0; a < size; ++a) {
            for (int b = a; b < size; ++b) {
                mat[a][b] += w * 0.5 * x * terms[a] * terms[b];
            }
        }
    }
    for (int a = 0; a < size; ++a) {
        for (int b = 0; b < a; ++b) {
            mat[a][b] = mat[b][a];
        }
    }
    return mat;
}

std::vector<std::vector<double>> povm_completeness_gram(int n_spins, HalfInt m,
                                                        const QuadratureRule& rule) {
    const ProblemSpec spec = validate_spec(n_spins, m);
    // Basis pairs (j, mu) over the accessible space, ladder-major.
    std::vector<std::pair<HalfInt, HalfInt>> basis;
    for (int i = 0; i < spec.ladder_size(); ++i) {
        const HalfInt j = spec.j_at(i);
        for (int t_mu = -j.twice(); t_mu <= j.twice(); t_mu += 2) {
            basis.emplace_back(j, HalfInt::from_twice(t_mu));
        }
    }
    const int dim = static_cast<int>(basis.size());

    // d^(j)_{m,mu}(theta) sampled at the quadrature nodes, with theta = acos(x)
    // so the sin(theta) surface weight is absorbed into the rule.
    std::vector<std::vector<double>> sampled(dim, std::vector<double>(rule.order));
    for (int a = 0; a < dim; ++a) {
        for (int k = 0; k < rule.order; ++k) {
            sampled[a][k] = wigner_d_full(basis[a].first, m, basis[a].second,
                                          std::acos(rule.nodes[k]));
        }
    }

    std::vector<std::vector<double>> gram(dim, std::vector<double>(dim, 0.0));
    for (int a = 0; a < dim; ++a) {
        for (int b = a; b < dim; ++b) {
            // Differing mu: the azimuthal integral vanishes identically, so
            // the entry stays an exact structural zero.
            if (basis[a].second != basis[b].second) {
                continue;
            }
            double integral = 0.0;
            for (int k = 0; k < rule.order; ++k) {
                integral += rule.weights[k] * sampled[a][k] * sampled[b][k];
            }
            const double norm =
                0.5 * std::sqrt((basis[a].first.twice() + 1.0) * (basis[b].first.twice() + 1.0));
            gram[a][b] = norm * integral;
            gram[b][a] = gram[a][b];
        }
    }
    return gram;
}

int default_density_order(int n_spins) {
    return n_spins + 8;
}

int default_gram_order(int n_spins) {
    return 2 * n_spins + 16;
}

VerificationReport verify_protocol(int n_spins, HalfInt m, int quad_order) {
    const ProblemSpec spec = validate_spec(n_spins, m);
    if (n_spins > VerificationReport::max_gram_spins) {
        throw UnsupportedError("verify_protocol: completeness check supports N <= " +
                               std::to_string(VerificationReport::max_gram_spins));
    }
    if (quad_order != 0 && quad_order < n_spins + 4) {
        throw InvalidArgumentError("verify_protocol: quad_order must be 0 or >= N + 4");
    }
    const int density_order = quad_order != 0 ? quad_order : default_density_order(n_spins);
    const int gram_order = quad_order != 0 ? 2 * quad_order : default_gram_order(n_spins);

    VerificationReport report;
    report.n_spins = n_spins;
    report.twice_m = m.twice();

    const QuadratureRule density_rule = gauss_legendre(density_order);
    const CouplingMatrix closed = build_coupling_matrix(spec);
    const auto oracle = coupling_matrix_oracle(spec, density_rule);
    for (int a = 0; a < closed.dim(); ++a) {
        for (int b = 0; b < closed.dim(); ++b) {
            double reference = 0.0;
            if (a == b) {
                reference = closed.diag[a];
            } else if (std::abs(a - b) == 1) {
                reference = closed.offdiag[std::min(a, b)];
            }
            report.coupling_dev = std::max(report.coupling_dev,
                                           std::abs(oracle[a][b] - reference));
        }
    }

    const FidelityResult optimal = optimal_fidelity(spec);
    report.density_dev = std::abs(density_normalization(optimal.state, density_rule) - 1.0);

    const auto gram = povm_completeness_gram(n_spins, m, gauss_legendre(gram_order));
    report.gram_dim = static_cast<int>(gram.size());
    for (int a = 0; a < report.gram_dim; ++a) {
        for (int b = 0; b < report.gram_dim; ++b) {
            report.gram_dev = std::max(report.gram_dev,
                                       std::abs(gram[a][b] - (a == b ? 1.0 : 0.0)));
        }
    }

    report.passed = report.coupling_dev <= VerificationReport::coupling_tol &&
                    report.density_dev <= VerificationReport::density_tol &&
                    report.gram_dev <= VerificationReport::gram_tol;
    return report;
}

}  // namespace spindir
