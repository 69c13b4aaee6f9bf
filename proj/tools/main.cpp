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

// Command-line front end. Talks to the library exclusively through the C API
// in spindir/spindir.h; all numeric serialization uses explicit formats so
// repeated runs are byte-identical.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spindir/spindir.h"

#include "csv_table.hpp"
#include "svg_plot.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitSampler = 4;
constexpr int kExitVerification = 5;

constexpr const char* kSweepHeader = "n,twice_m,fidelity,one_minus_f,scaled_constant";

std::string format_full(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_fixed(double value, int decimals) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::string format_sci(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", value);
    return buf;
}

/// Reports a failed library call on stderr and picks the exit code.
int report_failure(int status) {
    std::cerr << "error: " << spindir_error_name(status) << ": "
              << spindir_last_error_message() << "\n";
    switch (status) {
        case SPINDIR_E_BAD_N:
        case SPINDIR_E_PARITY_MISMATCH:
        case SPINDIR_E_OUT_OF_RANGE:
        case SPINDIR_E_UNSUPPORTED:
        case SPINDIR_E_INVALID_ARGUMENT:
            return kExitUsage;
        case SPINDIR_E_ENVELOPE_BREACH:
            std::cerr << "hint: rerun with a denser envelope grid\n";
            return kExitSampler;
        default:
            return kExitInternal;
    }
}

int emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kExitIo;
    }
    out << content;
    out.flush();
    if (!out) {
        std::cerr << "error: failed writing '" << out_path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

using FidelityHandle =
    std::unique_ptr<spindir_fidelity_result, decltype(&spindir_fidelity_result_free)>;

std::string sweep_csv_row(const spindir_fidelity_result* result) {
    const int n = spindir_fidelity_result_n(result);
    const double one_minus_f = spindir_fidelity_result_one_minus_f(result);
    const double scaled = one_minus_f * (n + 3.0) * (n + 3.0);
    std::string row = std::to_string(n);
    row += ',';
    row += std::to_string(spindir_fidelity_result_twice_m(result));
    row += ',';
    row += format_fixed(spindir_fidelity_result_fidelity(result), 5);
    row += ',';
    row += format_fixed(one_minus_f, 5);
    row += ',';
    row += format_fixed(scaled, 4);
    return row;
}

std::string sweep_json_row(const spindir_fidelity_result* result) {
    const int n = spindir_fidelity_result_n(result);
    const double one_minus_f = spindir_fidelity_result_one_minus_f(result);
    std::string obj = "{\"n\": " + std::to_string(n);
    obj += ", \"twice_m\": " + std::to_string(spindir_fidelity_result_twice_m(result));
    obj += ", \"fidelity\": " + format_full(spindir_fidelity_result_fidelity(result));
    obj += ", \"one_minus_f\": " + format_full(one_minus_f);
    obj += ", \"scaled_constant\": " + format_full(one_minus_f * (n + 3.0) * (n + 3.0));
    obj += "}";
    return obj;
}

int run_fidelity(int n, int twice_m, const std::string& format, const std::string& out_path) {
    spindir_fidelity_result* raw = nullptr;
    const int status = spindir_optimal_fidelity(n, twice_m, &raw);
    if (status != SPINDIR_OK) {
        return report_failure(status);
    }
    FidelityHandle result(raw, spindir_fidelity_result_free);

    std::string content;
    if (format == "csv") {
        content = std::string(kSweepHeader) + "\n" + sweep_csv_row(result.get()) + "\n";
    } else {
        content = "{\"n\": " + std::to_string(spindir_fidelity_result_n(result.get()));
        content += ", \"twice_m\": " +
                   std::to_string(spindir_fidelity_result_twice_m(result.get()));
        content += ", \"fidelity\": " +
                   format_full(spindir_fidelity_result_fidelity(result.get()));
        content += ", \"one_minus_f\": " +
                   format_full(spindir_fidelity_result_one_minus_f(result.get()));
        content += ", \"coefficients\": [";
        const int count = spindir_fidelity_result_coeff_count(result.get());
        for (int i = 0; i < count; ++i) {
            if (i > 0) {
                content += ", ";
            }
            content += format_full(spindir_fidelity_result_coeff(result.get(), i));
        }
        content += "]}\n";
    }
    return emit(content, out_path);
}

int run_sweep(int n_min, int n_max, const std::string& mode, const std::string& format,
              const std::string& out_path) {
    if (n_min < 1 || n_max < n_min) {
        std::cerr << "error: InvalidArgument: need 1 <= n-min <= n-max\n";
        return kExitUsage;
    }
    std::vector<std::string> rows;
    for (int n = n_min; n <= n_max; ++n) {
        spindir_fidelity_result* raw = nullptr;
        const int status = mode == "parallel" ? spindir_parallel_fidelity(n, &raw)
                                              : spindir_optimal_fidelity(n, SPINDIR_LOWEST_M, &raw);
        if (status != SPINDIR_OK) {
            return report_failure(status);
        }
        FidelityHandle result(raw, spindir_fidelity_result_free);
        rows.push_back(format == "json" ? sweep_json_row(result.get())
                                        : sweep_csv_row(result.get()));
    }

    std::string content;
    if (format == "json") {
        content = "[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i > 0) {
                content += ",\n ";
            }
            content += rows[i];
        }
        content += "]\n";
    } else {
        content = std::string(kSweepHeader) + "\n";
        for (const std::string& row : rows) {
            content += row + "\n";
        }
    }
    return emit(content, out_path);
}

int run_simulate(int n, int twice_m, std::uint64_t shots, std::uint64_t seed,
                 const std::string& format, const std::string& out_path) {
    spindir_simulation_report* raw = nullptr;
    const int status = spindir_simulate(n, twice_m, shots, seed, &raw);
    if (status != SPINDIR_OK) {
        return report_failure(status);
    }
    std::unique_ptr<spindir_simulation_report, decltype(&spindir_simulation_report_free)> report(
        raw, spindir_simulation_report_free);

    std::string content;
    if (format == "csv") {
        content = "n,twice_m,shots,seed,mean_fidelity_estimate,standard_error,exact_fidelity,"
                  "accepted_fraction\n";
        content += std::to_string(spindir_simulation_report_n(report.get()));
        content += ',' + std::to_string(spindir_simulation_report_twice_m(report.get()));
        content += ',' + std::to_string(spindir_simulation_report_shots(report.get()));
        content += ',' + std::to_string(spindir_simulation_report_seed(report.get()));
        content += ',' + format_full(spindir_simulation_report_estimate(report.get()));
        content += ',' + format_full(spindir_simulation_report_standard_error(report.get()));
        content += ',' + format_full(spindir_simulation_report_exact_fidelity(report.get()));
        content += ',' + format_full(spindir_simulation_report_accepted_fraction(report.get()));
        content += '\n';
    } else {
        content = "{\"n\": " + std::to_string(spindir_simulation_report_n(report.get()));
        content += ", \"twice_m\": " +
                   std::to_string(spindir_simulation_report_twice_m(report.get()));
        content += ", \"shots\": " + std::to_string(spindir_simulation_report_shots(report.get()));
        content += ", \"seed\": " + std::to_string(spindir_simulation_report_seed(report.get()));
        content += ", \"mean_fidelity_estimate\": " +
                   format_full(spindir_simulation_report_estimate(report.get()));
        content += ", \"standard_error\": " +
                   format_full(spindir_simulation_report_standard_error(report.get()));
        content += ", \"exact_fidelity\": " +
                   format_full(spindir_simulation_report_exact_fidelity(report.get()));
        content += ", \"accepted_fraction\": " +
                   format_full(spindir_simulation_report_accepted_fraction(report.get()));
        content += "}\n";
    }
    return emit(content, out_path);
}

int run_verify(int n, int twice_m, int quad_order) {
    spindir_verification_report* raw = nullptr;
    const int status = spindir_verify(n, twice_m, quad_order, &raw);
    if (status != SPINDIR_OK) {
        return report_failure(status);
    }
    std::unique_ptr<spindir_verification_report, decltype(&spindir_verification_report_free)>
        report(raw, spindir_verification_report_free);

    std::string content = "verification report for N = ";
    content += std::to_string(spindir_verification_report_n(report.get()));
    content += " (twice_m = " +
               std::to_string(spindir_verification_report_twice_m(report.get())) + ")\n";
    content += "  coupling matrix max deviation:   " +
               format_sci(spindir_verification_report_coupling_dev(report.get())) +
               "  (tolerance " + format_sci(spindir_verification_coupling_tol()) + ")\n";
    content += "  density normalization deviation: " +
               format_sci(spindir_verification_report_density_dev(report.get())) +
               "  (tolerance " + format_sci(spindir_verification_density_tol()) + ")\n";
    content += "  completeness Gram dimension:     " +
               std::to_string(spindir_verification_report_gram_dim(report.get())) + "\n";
    content += "  completeness max |G - I|:        " +
               format_sci(spindir_verification_report_gram_dev(report.get())) +
               "  (tolerance " + format_sci(spindir_verification_gram_tol()) + ")\n";
    const bool passed = spindir_verification_report_passed(report.get()) != 0;
    content += std::string("  result: ") + (passed ? "PASS" : "FAIL") + "\n";
    std::cout << content;
    return passed ? kExitOk : kExitVerification;
}

int run_plot(const std::vector<std::string>& inputs, const std::string& out_path) {
    std::vector<spindir_cli::SweepRow> rows;
    for (const std::string& path : inputs) {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open '" << path << "'\n";
            return kExitIo;
        }
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        std::string problem;
        if (!spindir_cli::parse_sweep_csv(text, kSweepHeader, rows, problem)) {
            std::cerr << "error: malformed CSV in '" << path << "': " << problem << "\n";
            return kExitUsage;
        }
    }
    if (rows.empty()) {
        std::cerr << "error: no data rows in input\n";
        return kExitUsage;
    }
    std::string problem;
    const std::string svg = spindir_cli::render_error_plot(rows, problem);
    if (svg.empty()) {
        std::cerr << "error: " << problem << "\n";
        return kExitUsage;
    }
    return emit(svg, out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal direction transmission with N spins: fidelity computation, "
                 "numerical verification, and Monte Carlo simulation"};
    app.require_subcommand(1);

    int n = 0;
    int twice_m = SPINDIR_LOWEST_M;
    int quad_order = 0;
    int n_min = 1;
    int n_max = 1;
    std::uint64_t shots = 100000;
    std::uint64_t seed = 0;
    std::string mode = "optimal";
    std::string format = "json";
    std::string sweep_format = "csv";
    std::string out_path;
    std::vector<std::string> inputs;

    CLI::App* fidelity = app.add_subcommand(
        "fidelity", "Optimal signal coefficients and fidelity for N spins");
    fidelity->add_option("--n", n, "number of spins")->required();
    fidelity->add_option("--twice-m", twice_m, "2m (defaults to the lowest legal m)");
    fidelity->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    fidelity->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* sweep = app.add_subcommand("sweep", "Fidelity for every N in a range");
    sweep->add_option("--n-min", n_min, "smallest N")->required();
    sweep->add_option("--n-max", n_max, "largest N")->required();
    sweep->add_option("--mode", mode, "optimal (lowest m) or parallel (m = N/2)")
        ->check(CLI::IsMember({"optimal", "parallel"}));
    sweep->add_option("--format", sweep_format, "csv or json")
        ->check(CLI::IsMember({"json", "csv"}));
    sweep->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Monte Carlo run of the protocol with the exact outcome density");
    simulate->add_option("--n", n, "number of spins")->required();
    simulate->add_option("--twice-m", twice_m, "2m (defaults to the lowest legal m)");
    simulate->add_option("--shots", shots, "number of protocol rounds");
    simulate->add_option("--seed", seed, "RNG seed");
    simulate->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    simulate->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand(
        "verify", "Numerical self-checks: coupling-matrix reconstruction, density "
                  "normalization, measurement completeness");
    verify->add_option("--n", n, "number of spins (<= 20)")->required();
    verify->add_option("--twice-m", twice_m, "2m (defaults to the lowest legal m)");
    verify->add_option("--quad-order", quad_order, "quadrature order override (0 = defaults)");

    CLI::App* plot = app.add_subcommand(
        "plot", "Render sweep CSV data as an SVG scatter of 1-F versus N (log y)");
    plot->add_option("--input", inputs, "sweep CSV (repeat for a second series)")
        ->required()
        ->expected(1, 2);
    plot->add_option("--out", out_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (fidelity->parsed()) {
        return run_fidelity(n, twice_m, format, out_path);
    }
    if (sweep->parsed()) {
        return run_sweep(n_min, n_max, mode, sweep_format, out_path);
    }
    if (simulate->parsed()) {
        return run_simulate(n, twice_m, shots, seed, format, out_path);
    }
    if (verify->parsed()) {
        return run_verify(n, twice_m, quad_order);
    }
    if (plot->parsed()) {
        return run_plot(inputs, out_path);
    }
    return kExitUsage;
}
