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

// Acceptance suite: the release gate. Runs each numbered criterion at its
// pinned tolerance and prints one PASS/FAIL line per criterion. Exits
// non-zero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "spindir/asymptotics.hpp"
#include "spindir/optimal_state.hpp"
#include "spindir/povm_check.hpp"
#include "spindir/simulate.hpp"

#ifndef SPINDIR_CLI_PATH
#error "SPINDIR_CLI_PATH must point at the CLI binary"
#endif

using spindir::HalfInt;
using spindir::validate_spec;

namespace {

struct Criterion {
    std::string label;
    std::function<bool(std::string&)> run;
};

bool check(bool condition, const std::string& what, std::string& detail) {
    if (!condition && detail.empty()) {
        detail = what;
    }
    return condition;
}

// ---- C1: three-spin golden values -----------------------------------------

bool golden_three_spins(std::string& detail) {
    const auto result = spindir::optimal_fidelity(3);
    bool ok = true;
    ok &= check(std::abs(result.fidelity - 0.84495) <= 1e-5,
                "fidelity " + std::to_string(result.fidelity), detail);
    ok &= check(result.state.coeffs.size() == 2, "coefficient count", detail);
    // The optimal coefficients of the two-rung ladder; c_low/c_high equals
    // (3*sqrt(3) + sqrt(2))/5 in closed form, giving (0.79755, 0.60326) to
    // five decimals.
    ok &= check(std::abs(result.state.coeffs[0] - 0.79755) <= 1e-5,
                "c_low " + std::to_string(result.state.coeffs[0]), detail);
    ok &= check(std::abs(result.state.coeffs[1] - 0.60326) <= 1e-5,
                "c_high " + std::to_string(result.state.coeffs[1]), detail);
    const double ratio = (3.0 * std::sqrt(3.0) + std::sqrt(2.0)) / 5.0;
    ok &= check(std::abs(result.state.coeffs[0] / result.state.coeffs[1] - ratio) <= 1e-12,
                "closed-form component ratio", detail);
    if (ok) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "F = %.6f, c = (%.6f, %.6f)", result.fidelity,
                      result.state.coeffs[0], result.state.coeffs[1]);
        detail = buf;
    }
    return ok;
}

// ---- C2: parallel baseline through the matrix path ------------------------

bool baseline_recovery(std::string& detail) {
    double worst = 0.0;
    for (int n = 1; n <= 50; ++n) {
        const double f = spindir::parallel_spin_fidelity(n).fidelity;
        worst = std::max(worst, std::abs(f - (n + 1.0) / (n + 2.0)));
    }
    detail = "max |F - (N+1)/(N+2)| = " + std::to_string(worst);
    return worst <= 1e-12;
}

// ---- C3: two-spin closed form ----------------------------------------------

bool two_spin_coincidence(std::string& detail) {
    const double f = spindir::optimal_fidelity(2).fidelity;
    const double exact = 0.5 * (1.0 + 1.0 / std::sqrt(3.0));
    char buf[96];
    std::snprintf(buf, sizeof buf, "F = %.15f vs (1+1/sqrt(3))/2, dev %.2e", f,
                  std::abs(f - exact));
    detail = buf;
    return std::abs(f - exact) <= 1e-12;
}

// ---- C4: quadrature reconstruction of the coupling matrix -----------------

bool oracle_equivalence(std::string& detail) {
    double worst_band = 0.0;
    double worst_off = 0.0;
    for (int n = 1; n <= 12; ++n) {
        const auto rule = spindir::gauss_legendre(spindir::default_density_order(n));
        for (int tm = n % 2; tm <= n; tm += 2) {
            const auto spec = validate_spec(n, HalfInt::from_twice(tm));
            const auto oracle = spindir::coupling_matrix_oracle(spec, rule);
            const auto closed = spindir::build_coupling_matrix(spec);
            for (int a = 0; a < closed.dim(); ++a) {
                for (int b = 0; b < closed.dim(); ++b) {
                    double reference = 0.0;
                    if (a == b) {
                        reference = closed.diag[a];
                    } else if (std::abs(a - b) == 1) {
                        reference = closed.offdiag[std::min(a, b)];
                    }
                    const double dev = std::abs(oracle[a][b] - reference);
                    (std::abs(a - b) >= 2 ? worst_off : worst_band) =
                        std::max(std::abs(a - b) >= 2 ? worst_off : worst_band, dev);
                }
            }
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "band dev %.2e (tol 1e-10), off-band %.2e (tol 1e-12)",
                  worst_band, worst_off);
    detail = buf;
    return worst_band <= 1e-10 && worst_off <= 1e-12;
}

// ---- C5: measurement completeness ------------------------------------------

bool povm_completeness(std::string& detail) {
    double worst = 0.0;
    for (int n = 1; n <= 10; ++n) {
        const auto rule = spindir::gauss_legendre(spindir::default_gram_order(n));
        const auto gram = spindir::povm_completeness_gram(n, spindir::lowest_m(n), rule);
        if (static_cast<long long>(gram.size()) != spindir::hilbert_dimension(n)) {
            detail = "Gram dimension mismatch at N = " + std::to_string(n);
            return false;
        }
        for (std::size_t a = 0; a < gram.size(); ++a) {
            for (std::size_t b = 0; b < gram.size(); ++b) {
                worst = std::max(worst, std::abs(gram[a][b] - (a == b ? 1.0 : 0.0)));
            }
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max |G - I| = %.2e (tol 1e-9)", worst);
    detail = buf;
    return worst <= 1e-9;
}

// ---- C6: outcome density normalization -------------------------------------

bool density_normalization(std::string& detail) {
    double worst = 0.0;
    for (int n = 1; n <= 12; ++n) {
        const auto rule = spindir::gauss_legendre(spindir::default_density_order(n));
        const auto state = spindir::optimal_fidelity(n).state;
        worst = std::max(worst, std::abs(spindir::density_normalization(state, rule) - 1.0));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max |int p - 1| = %.2e (tol 1e-10)", worst);
    detail = buf;
    return worst <= 1e-10;
}

// ---- C7: Monte Carlo consistency -------------------------------------------

// 0.999 quantiles of chi-square, frozen per degree-of-freedom count.
double chi2_threshold_999(int dof) {
    static const double table[10] = {
        73.401957518991,  // 40
        74.744938398424, 76.083762707700, 77.418578241314, 78.749524228043,
        80.076732010819, 81.400325658710, 82.720422519124, 84.037133717223,
        85.350564608593,  // 49
    };
    if (dof < 40 || dof > 49) {
        return -1.0;  // outside the expected pooling range; treated as failure
    }
    return table[dof - 40];
}

bool monte_carlo_consistency(std::string& detail) {
    // estimator battery: 10 seeds x N in {1,2,3,4,10}, 1e5 shots each
    double worst_pull = 0.0;
    for (int n : {1, 2, 3, 4, 10}) {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            spindir::SamplerConfig config;
            config.seed = seed;
            config.shots = 100000;
            const auto report =
                spindir::simulate_protocol(validate_spec(n, spindir::lowest_m(n)), config);
            const double pull =
                std::abs(report.mean_fidelity_estimate - report.exact_fidelity) /
                report.standard_error;
            worst_pull = std::max(worst_pull, pull);
            if (pull > 5.0) {
                detail = "N = " + std::to_string(n) + ", seed = " + std::to_string(seed) +
                         ": |estimate - exact| = " + std::to_string(pull) + " stderr";
                return false;
            }
        }
    }

    // distributional check: chi-square against p(x), 50 equal-x bins with
    // adjacent low-expectation bins pooled to E >= 5 (plain multinomial
    // chi-square needs that), 0.001 significance
    double worst_stat_margin = 0.0;
    for (int n = 1; n <= 6; ++n) {
        const auto spec = validate_spec(n, spindir::lowest_m(n));
        const auto state = spindir::optimal_fidelity(spec).state;
        const int bins = 50;
        const std::uint64_t shots = 100000;

        const auto rule = spindir::gauss_legendre(16);
        std::vector<double> expected(bins);
        for (int i = 0; i < bins; ++i) {
            const double a = -1.0 + 2.0 * i / bins;
            const double b = -1.0 + 2.0 * (i + 1) / bins;
            double acc = 0.0;
            for (int k = 0; k < rule.order; ++k) {
                const double x = 0.5 * (b - a) * rule.nodes[k] + 0.5 * (a + b);
                acc += rule.weights[k] * spindir::density_eval(state, x);
            }
            expected[i] = static_cast<double>(shots) * 0.5 * (b - a) * acc;
        }

        std::vector<std::uint64_t> counts(bins, 0);
        spindir::OutcomeSampler sampler(state, 4096, 1.000001);
        spindir::SplitMix64 rng(12345u + static_cast<std::uint64_t>(n));
        std::uint64_t proposals = 0;
        for (std::uint64_t shot = 0; shot < shots; ++shot) {
            const double x = sampler.sample(rng, proposals);
            int bin = static_cast<int>((x + 1.0) * 0.5 * bins);
            if (bin == bins) {
                bin = bins - 1;
            }
            ++counts[bin];
        }

        // pool left to right until each group expects at least 5 counts
        std::vector<double> pooled_expected;
        std::vector<double> pooled_observed;
        double acc_e = 0.0;
        double acc_o = 0.0;
        for (int i = 0; i < bins; ++i) {
            acc_e += expected[i];
            acc_o += static_cast<double>(counts[i]);
            if (acc_e >= 5.0) {
                pooled_expected.push_back(acc_e);
                pooled_observed.push_back(acc_o);
                acc_e = 0.0;
                acc_o = 0.0;
            }
        }
        if (acc_e > 0.0) {
            pooled_expected.back() += acc_e;
            pooled_observed.back() += acc_o;
        }

        double stat = 0.0;
        for (std::size_t i = 0; i < pooled_expected.size(); ++i) {
            const double diff = pooled_observed[i] - pooled_expected[i];
            stat += diff * diff / pooled_expected[i];
        }
        const int dof = static_cast<int>(pooled_expected.size()) - 1;
        const double threshold = chi2_threshold_999(dof);
        if (threshold < 0.0 || stat > threshold) {
            detail = "chi-square N = " + std::to_string(n) + ": stat " + std::to_string(stat) +
                     " vs threshold " + std::to_string(threshold) + " (dof " +
                     std::to_string(dof) + ")";
            return false;
        }
        worst_stat_margin = std::max(worst_stat_margin, stat / threshold);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "worst pull %.2f stderr, worst chi2 stat/threshold %.2f",
                  worst_pull, worst_stat_margin);
    detail = buf;
    return true;
}

// ---- C8: large-N asymptote --------------------------------------------------

bool asymptote(std::string& detail) {
    const auto report = spindir::asymptote_sweep({125, 250, 500, 1000});
    const double scaled_1000 = report.scaled.back();
    // Tolerances tightened from the 2% / 0.5% ceilings after confirming the
    // convergence rate at N up to 2000: scaled(1000) sits within 6e-7 of
    // 5.78317 and the extrapolation within 3e-6.
    const double scaled_rel = std::abs(scaled_1000 / 5.78317 - 1.0);
    const double extrap_rel = std::abs(report.extrapolated_constant / 5.78317 - 1.0);
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "scaled(1000) = %.6f (rel dev %.1e, tol 1e-3), extrapolated = %.6f "
                  "(rel dev %.1e, tol 5e-4)",
                  scaled_1000, scaled_rel, report.extrapolated_constant, extrap_rel);
    detail = buf;
    return scaled_rel <= 1e-3 && extrap_rel <= 5e-4;
}

// ---- C9: entangled states dominate parallel ones ---------------------------

bool dominance(std::string& detail) {
    for (int n = 2; n <= 50; ++n) {
        if (!(spindir::optimal_fidelity(n).one_minus_f <
              spindir::parallel_spin_fidelity(n).one_minus_f)) {
            detail = "no strict improvement at N = " + std::to_string(n);
            return false;
        }
    }
    if (spindir::optimal_fidelity(1).fidelity != spindir::parallel_spin_fidelity(1).fidelity) {
        detail = "N = 1 families must coincide";
        return false;
    }
    detail = "optimal error strictly below parallel for N = 2..50, equal at N = 1";
    return true;
}

// ---- C10: CLI determinism ----------------------------------------------------

std::string capture_path(int index) {
    return "acceptance_cli_" + std::to_string(index) + ".out";
}

int run_cli(const std::string& args, const std::string& capture) {
    const std::string command =
        std::string("\"") + SPINDIR_CLI_PATH + "\" " + args + " > " + capture + " 2>&1";
    const int raw = std::system(command.c_str());
    return (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool cli_determinism(std::string& detail) {
    const std::string opt_csv = "acceptance_opt.csv";
    const std::string par_csv = "acceptance_par.csv";
    const std::string svg = "acceptance_fig.svg";
    const std::vector<std::string> commands = {
        "fidelity --n 3",
        "fidelity --n 8 --format csv",
        "sweep --n-min 1 --n-max 30 --mode optimal --out " + opt_csv,
        "sweep --n-min 1 --n-max 30 --mode parallel --out " + par_csv,
        "simulate --n 4 --shots 50000 --seed 11",
        "verify --n 6",
        "plot --input " + opt_csv + " --input " + par_csv + " --out " + svg,
    };
    for (std::size_t i = 0; i < commands.size(); ++i) {
        const std::string first = capture_path(static_cast<int>(2 * i));
        const std::string second = capture_path(static_cast<int>(2 * i + 1));
        const int code_a = run_cli(commands[i], first);
        std::string file_a;
        if (commands[i].find("--out ") != std::string::npos) {
            file_a = read_file(commands[i].substr(commands[i].rfind(' ') + 1));
        }
        const int code_b = run_cli(commands[i], second);
        if (code_a != 0 || code_b != 0) {
            detail = "'" + commands[i] + "' exited " + std::to_string(code_a) + "/" +
                     std::to_string(code_b);
            return false;
        }
        if (read_file(first) != read_file(second)) {
            detail = "stdout of '" + commands[i] + "' differs between runs";
            return false;
        }
        if (commands[i].find("--out ") != std::string::npos) {
            const std::string file_b = read_file(commands[i].substr(commands[i].rfind(' ') + 1));
            if (file_a != file_b) {
                detail = "output file of '" + commands[i] + "' differs between runs";
                return false;
            }
        }
    }
    detail = std::to_string(commands.size()) + " commands byte-identical across repeated runs";
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"golden three-spin fidelity and coefficients", golden_three_spins},
        {"parallel baseline F = (N+1)/(N+2) for N = 1..50", baseline_recovery},
        {"two-spin closed form F = (1 + 1/sqrt(3))/2", two_spin_coincidence},
        {"quadrature matrix matches closed form for N <= 12", oracle_equivalence},
        {"measurement completeness Gram = identity for N <= 10", povm_completeness},
        {"outcome density normalization for N <= 12", density_normalization},
        {"Monte Carlo estimator and distribution checks", monte_carlo_consistency},
        {"large-N error constant 5.78317/(N+3)^2", asymptote},
        {"entangled optimum strictly beats parallel spins", dominance},
        {"CLI outputs byte-identical across repeated runs", cli_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& err) {
            detail = std::string("exception: ") + err.what();
        }
        std::printf("[%s] criterion %2zu: %s%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) {
            ++failures;
        }
    }
    if (failures > 0) {
        std::printf("%d of %zu acceptance criteria FAILED\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return 0;
}
