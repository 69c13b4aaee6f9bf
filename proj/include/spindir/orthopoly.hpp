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

/// Jacobi polynomial P^(a,b)_n(x) for non-negative integer a, b, evaluated by
/// the forward three-term recurrence in n (stable on [-1, 1]).
double jacobi_poly(int n, int a, int b, double x);

/// Diagonal rotation-matrix element d^(j)_{mm} as a function of x = cos(chi):
/// ((1+x)/2)^m * P^(0,2m)_{j-m}(x). Requires j >= m >= 0 with matching parity.
double wigner_d_diag(HalfInt j, HalfInt m, double x);

/// General rotation-matrix element d^(j)_{m_row, m_col}(theta) by the explicit
/// alternating sum over contractions. Agrees with wigner_d_diag when
/// m_row == m_col. Supported up to j = 60.
double wigner_d_full(HalfInt j, HalfInt m_row, HalfInt m_col, double theta);

/// Gauss-Legendre quadrature rule on [-1, 1].
struct QuadratureRule {
    std::vector<double> nodes;    // strictly increasing, symmetric about 0
    std::vector<double> weights;  // positive, summing to 2
    int order = 0;

    template <typename F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            acc += weights[i] * f(nodes[i]);
        }
        return acc;
    }
};

/// Builds the order-point Gauss-Legendre rule by Newton root polishing of the
/// Legendre polynomial. Exact for polynomials of degree <= 2*order - 1.
QuadratureRule gauss_legendre(int order);

}  // namespace spindir
