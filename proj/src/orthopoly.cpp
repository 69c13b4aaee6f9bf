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

#include "spindir/orthopoly.hpp"

#include <array>
#include <cmath>
#include <string>

namespace spindir {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Largest twice-j accepted by wigner_d_full. Factorial arguments stay <= 120.
constexpr int kMaxTwiceJ = 120;

const std::array<long double, kMaxTwiceJ + 1>& factorial_table() {
    static const auto table = [] {
        std::array<long double, kMaxTwiceJ + 1> f{};
        f[0] = 1.0L;
        for (int i = 1; i <= kMaxTwiceJ; ++i) {
            f[i] = f[i - 1] * static_cast<long double>(i);
        }
        return f;
    }();
    return table;
}

void check_unit_interval(double x, const char* where) {
    if (!(x >= -1.0 && x <= 1.0)) {
        throw InvalidArgumentError(std::string(where) + ": x must lie in [-1, 1], got " +
                                   std::to_string(x));
    }
}

}  // namespace

double jacobi_poly(int n, int a, int b, double x) {
    if (n < 0 || a < 0 || b < 0) {
        throw InvalidArgumentError("jacobi_poly: n, a, b must be non-negative");
    }
    check_unit_interval(x, "jacobi_poly");
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = (a + 1) + 0.5 * (a + b + 2) * (x - 1.0);
    for (int k = 2; k <= n; ++k) {
        const double s = 2.0 * k + a + b;
        const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        const double c2 = (s - 1.0) * (s * (s - 2.0) * x + static_cast<double>(a) * a -
                                       static_cast<double>(b) * b);
        const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        const double next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    return cur;
}

double wigner_d_diag(HalfInt j, HalfInt m, double x) {
    const int tj = j.twice();
    const int tm = m.twice();
    if (tm < 0 || tj < tm) {
        throw InvalidArgumentError("wigner_d_diag: requires j >= m >= 0");
    }
    if ((tj - tm) % 2 != 0) {
        throw InvalidArgumentError("wigner_d_diag: j and m must have equal parity");
    }
    check_unit_interval(x, "wigner_d_diag");
    const int n = (tj - tm) / 2;
    // cos^2(chi/2) = (1+x)/2; the exponent m may be half-integral.
    return std::pow(0.5 * (1.0 + x), 0.5 * tm) * jacobi_poly(n, 0, tm, x);
}

// Explicit contraction sum for d^(j)_{m_row, m_col}(theta). The terms
// alternate in sign with magnitudes up to ~10^6 at j = 25, so everything is
// accumulated in long double with factorials taken from an exact-product
// table; log-gamma round-trips would cap the achievable absolute accuracy
// near 1e-10 here.
double wigner_d_full(HalfInt j, HalfInt m_row, HalfInt m_col, double theta) {
    const int tj = j.twice();
    const int ta = m_row.twice();
    const int tb = m_col.twice();
    if (tj < 0 || std::abs(ta) > tj || std::abs(tb) > tj) {
        throw InvalidArgumentError("wigner_d_full: requires |m_row|, |m_col| <= j");
    }
    if ((tj - ta) % 2 != 0 || (tj - tb) % 2 != 0) {
        throw InvalidArgumentError("wigner_d_full: m_row, m_col must match the parity of j");
    }
    if (tj > kMaxTwiceJ) {
        throw UnsupportedError("wigner_d_full: j > " + std::to_string(kMaxTwiceJ / 2) +
                               " not supported");
    }

    const auto& fact = factorial_table();
    const int j_plus_row = (tj + ta) / 2;
    const int j_minus_row = (tj - ta) / 2;
    const int j_plus_col = (tj + tb) / 2;
    const int j_minus_col = (tj - tb) / 2;
    const int row_minus_col = (ta - tb) / 2;

    const long double pref = sqrtl(fact[j_plus_row] * fact[j_minus_row] * fact[j_plus_col] *
                                   fact[j_minus_col]);
    const long double c = cosl(0.5L * static_cast<long double>(theta));
    const long double s = sinl(0.5L * static_cast<long double>(theta));

    const int s_min = std::max(0, -row_minus_col);
    const int s_max = std::min(j_plus_col, j_minus_row);
    long double sum = 0.0L;
    for (int k = s_min; k <= s_max; ++k) {
        const long double denom =
            fact[j_plus_col - k] * fact[k] * fact[row_minus_col + k] * fact[j_minus_row - k];
        const int cos_pow = tj - row_minus_col - 2 * k;
        const int sin_pow = row_minus_col + 2 * k;
        long double term = pref / denom;
        term *= powl(c, static_cast<long double>(cos_pow));
        term *= powl(s, static_cast<long double>(sin_pow));
        if ((row_minus_col + k) % 2 != 0) {
            term = -term;
        }
        sum += term;
    }
    return static_cast<double>(sum);
}

QuadratureRule gauss_legendre(int order) {
    if (order < 1) {
        throw InvalidArgumentError("gauss_legendre: order must be >= 1");
    }
    QuadratureRule rule;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);

    const int half = order / 2;
    for (int i = 0; i < half; ++i) {
        // Root i of P_order counted from x = +1, standard asymptotic guess.
        double z = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double deriv = 0.0;
        bool converged = false;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre value and derivative at z by the three-term recurrence.
            double p_prev = 0.0;
            double p = 1.0;
            for (int k = 1; k <= order; ++k) {
                const double p_new = ((2.0 * k - 1.0) * z * p - (k - 1.0) * p_prev) / k;
                p_prev = p;
                p = p_new;
            }
            deriv = order * (z * p - p_prev) / (z * z - 1.0);
            const double dz = p / deriv;
            z -= dz;
            if (std::abs(dz) <= 1e-15) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw NoConvergenceError("gauss_legendre: Newton polish failed at order " +
                                     std::to_string(order));
        }
        const double w = 2.0 / ((1.0 - z * z) * deriv * deriv);
        rule.nodes[order - 1 - i] = z;
        rule.nodes[i] = -z;
        rule.weights[order - 1 - i] = w;
        rule.weights[i] = w;
    }
    if (order % 2 == 1) {
        // Middle node is exactly 0 by symmetry.
        double p_prev = 0.0;
        double p = 1.0;
        for (int k = 1; k <= order; ++k) {
            const double p_new = (-(k - 1.0) * p_prev) / k;
            p_prev = p;
            p = p_new;
        }
        const double deriv = order * (-p_prev) / (-1.0);
        rule.nodes[half] = 0.0;
        rule.weights[half] = 2.0 / (deriv * deriv);
    }
    return rule;
}

}  // namespace spindir
