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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "csv_table.hpp"

namespace spindir_cli {

/// Scatter of 1-F versus N with a log y axis, two marker styles: closed
/// circles for the entangled optimum (lowest m), open circles for the
/// all-parallel baseline (m = N/2). Output is a self-contained SVG 1.1
/// document, byte-deterministic for identical inputs.
inline std::string render_error_plot(const std::vector<SweepRow>& rows, std::string& problem) {
    std::vector<SweepRow> optimal;
    std::vector<SweepRow> parallel;
    for (const SweepRow& row : rows) {
        if (row.one_minus_f <= 0.0) {
            problem = "one_minus_f must be positive to log-scale (N = " +
                      std::to_string(row.n) + ")";
            return std::string();
        }
        // m = N/2 marks the parallel family. N = 1 satisfies that trivially;
        // its first occurrence goes to the optimal series so that two
        // concatenated full sweeps split evenly.
        const bool parallel_shaped = row.twice_m == row.n;
        bool optimal_has_row = false;
        for (const SweepRow& prev : optimal) {
            if (prev.n == row.n) {
                optimal_has_row = true;
                break;
            }
        }
        if (parallel_shaped && (row.n > 1 || optimal_has_row)) {
            parallel.push_back(row);
        } else {
            optimal.push_back(row);
        }
    }

    int n_max = 1;
    double y_min = rows[0].one_minus_f;
    double y_max = rows[0].one_minus_f;
    for (const SweepRow& row : rows) {
        n_max = std::max(n_max, row.n);
        y_min = std::min(y_min, row.one_minus_f);
        y_max = std::max(y_max, row.one_minus_f);
    }
    const int dec_lo = static_cast<int>(std::floor(std::log10(y_min)));
    const int dec_hi = static_cast<int>(std::ceil(std::log10(y_max)));

    const double width = 640.0, height = 480.0;
    const double left = 70.0, right = 24.0, top = 24.0, bottom = 56.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    const double x_span = std::max(1.0, n_max + 1.0 - 0.0);
    const double log_lo = dec_lo, log_hi = std::max<double>(dec_hi, dec_lo + 1);

    auto x_px = [&](double n) { return left + plot_w * (n - 0.0) / x_span; };
    auto y_px = [&](double v) {
        return top + plot_h * (log_hi - std::log10(v)) / (log_hi - log_lo);
    };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    svg += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";

    // y decades: gridline, tick label 1e<k>
    for (int dec = dec_lo; dec <= dec_hi; ++dec) {
        const double v = std::pow(10.0, dec);
        if (v < y_min / 10.0 || v > y_max * 10.0) {
            continue;
        }
        const double y = y_px(v);
        svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(left + plot_w) + "\" y2=\"" + num(y) +
               "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(left - 8.0) + "\" y=\"" + num(y + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">1e" +
               std::to_string(dec) + "</text>\n";
    }

    // x ticks at a deterministic integer step
    const int x_step = std::max(1, (n_max + 9) / 10);
    for (int tick = 0; tick <= n_max + 1; tick += x_step) {
        const double x = x_px(tick);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(top + plot_h) + "\" x2=\"" + num(x) +
               "\" y2=\"" + num(top + plot_h + 5.0) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(top + plot_h + 20.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
               std::to_string(tick) + "</text>\n";
    }

    // frame
    svg += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(plot_w) +
           "\" height=\"" + num(plot_h) + "\" fill=\"none\" stroke=\"black\" "
           "stroke-width=\"1\"/>\n";

    // axis labels
    svg += "<text x=\"" + num(left + plot_w / 2.0) + "\" y=\"" + num(height - 14.0) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">N</text>\n";
    svg += "<text x=\"18\" y=\"" + num(top + plot_h / 2.0) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 18 " +
           num(top + plot_h / 2.0) + ")\">1 - F</text>\n";

    for (const SweepRow& row : optimal) {
        svg += "<circle cx=\"" + num(x_px(row.n)) + "\" cy=\"" + num(y_px(row.one_minus_f)) +
               "\" r=\"3.5\" fill=\"black\"/>\n";
    }
    for (const SweepRow& row : parallel) {
        svg += "<circle cx=\"" + num(x_px(row.n)) + "\" cy=\"" + num(y_px(row.one_minus_f)) +
               "\" r=\"3.5\" fill=\"white\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
    }

    // legend
    const double lx = left + plot_w - 170.0, ly = top + 14.0;
    svg += "<circle cx=\"" + num(lx) + "\" cy=\"" + num(ly) + "\" r=\"3.5\" fill=\"black\"/>\n";
    svg += "<text x=\"" + num(lx + 10.0) + "\" y=\"" + num(ly + 4.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\">optimal (lowest m)</text>\n";
    svg += "<circle cx=\"" + num(lx) + "\" cy=\"" + num(ly + 18.0) +
           "\" r=\"3.5\" fill=\"white\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
    svg += "<text x=\"" + num(lx + 10.0) + "\" y=\"" + num(ly + 22.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\">parallel (m = N/2)</text>\n";

    svg += "</svg>\n";
    return svg;
}

}  // namespace spindir_cli
