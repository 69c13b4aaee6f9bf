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

#include "spindir/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "spindir/optimal_state.hpp"

namespace spindir {

namespace {

/// Interpolates scaled(N) = c + a/N + b/N^2 through up to three (N, scaled)
/// points (largest N values first) and returns c. With fewer points the fit
/// drops the highest-order terms.
double extrapolate_constant(const std::vector<std::pair<int, double>>& points) {
    if (points.empty()) {
        return 0.0;
    }
    if (points.size() == 1) {
        return points[0].second;
    }
    if (points.size() == 2) {
        const double u0 = 1.0 / points[0].first;
        const double u1 = 1.0 / points[1].first;
        const double slope = (points[1].second - points[0].second) / (u1 - u0);
        return points[0].second - slope * u0;
    }
    // 3x3 solve by Gaussian elimination with partial pivoting.
    std::array<std::array<double, 4>, 3> aug{};
    for (int r = 0; r < 3; ++r) {
        const double u = 1.0 / points[r].first;
        aug[r] = {1.0, u, u * u, points[r].second};
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::abs(aug[r][col]) > std::abs(aug[pivot][col])) {
                pivot = r;
            }
        }
        std::swap(aug[col], aug[pivot]);
        for (int r = col + 1; r < 3; ++r) {
            const double f = aug[r][col] / aug[col][col];
            for (int c = col; c < 4; ++c) {
                aug[r][c] -= f * aug[col][c];
            }
        }
    }
    double coeff[3];
    for (int r = 2; r >= 0; --r) {
        double acc = aug[r][3];
        for (int c = r + 1; c < 3; ++c) {
            acc -= aug[r][c] * coeff[c];
        }
        coeff[r] = acc / aug[r][r];
    }
    return coeff[0];
}

}  // namespace

AsymptoteReport asymptote_sweep(const std::vector<int>& n_list) {
    AsymptoteReport report;
    report.n_values = n_list;
    report.one_minus_f.reserve(n_list.size());
    report.scaled.reserve(n_list.size());
    for (int n : n_list) {
        const FidelityResult result = optimal_fidelity(n);
        report.one_minus_f.push_back(result.one_minus_f);
        report.scaled.push_back(result.one_minus_f * (n + 3.0) * (n + 3.0));
    }

    // The scaled sequence converges numerically to 5.7831860..., which
    // matches the squared first zero of the Bessel function J0
    // (2.4048256^2); the fit below recovers it from finite-N data.
    std::vector<std::pair<int, double>> points;
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        points.emplace_back(n_list[i], report.scaled[i]);
    }
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    points.erase(std::unique(points.begin(), points.end(),
                             [](const auto& a, const auto& b) { return a.first == b.first; }),
                 points.end());
    if (points.size() > 3) {
        points.resize(3);
    }
    report.extrapolated_constant = extrapolate_constant(points);
    return report;
}

std::vector<Figure1Row> figure1_data(int n_max) {
    if (n_max < 2) {
        throw InvalidArgumentError("figure1_data: n_max must be >= 2");
    }
    std::vector<Figure1Row> rows;
    rows.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        rows.push_back(Figure1Row{n, optimal_fidelity(n).one_minus_f,
                                  parallel_spin_fidelity(n).one_minus_f});
    }
    return rows;
}

}  // namespace spindir
