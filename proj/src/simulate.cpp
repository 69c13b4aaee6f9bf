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

#include "spindir/simulate.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "spindir/optimal_state.hpp"
#include "spindir/povm_check.hpp"

namespace spindir {

namespace {

// A stuck sampler is a bug, not a statistics problem; expected proposals per
// draw are 2 * max(p) * slack, a few dozen at most for sensible N.
constexpr std::uint64_t kMaxProposalsPerDraw = 1u << 24;

}  // namespace

double rejection_sample(const SignalState& state, double envelope_height, SplitMix64& rng,
                        std::uint64_t& proposals) {
    for (std::uint64_t attempt = 0; attempt < kMaxProposalsPerDraw; ++attempt) {
        ++proposals;
        const double x = 2.0 * rng.next_unit() - 1.0;
        const double u = rng.next_unit();
        const double p = density_eval(state, x);
        if (p > envelope_height) {
            throw EnvelopeBreachError("outcome density " + std::to_string(p) + " at x = " +
                                      std::to_string(x) + " exceeds envelope height " +
                                      std::to_string(envelope_height) +
                                      "; rebuild the envelope with a denser grid");
        }
        if (u * envelope_height <= p) {
            return x;
        }
    }
    throw NoConvergenceError("rejection_sample: proposal cap hit; envelope far too high");
}

OutcomeSampler::OutcomeSampler(SignalState state, int envelope_grid, double envelope_slack)
    : state_(std::move(state)) {
    if (envelope_grid < 64) {
        throw InvalidArgumentError("OutcomeSampler: envelope_grid must be >= 64");
    }
    if (!(envelope_slack > 1.0)) {
        throw InvalidArgumentError("OutcomeSampler: envelope_slack must exceed 1");
    }
    double peak = 0.0;
    for (int i = 0; i < envelope_grid; ++i) {
        const double x = -1.0 + 2.0 * i / (envelope_grid - 1.0);
        peak = std::max(peak, density_eval(state_, x));
    }
    envelope_height_ = peak * envelope_slack;
}

double OutcomeSampler::sample(SplitMix64& rng, std::uint64_t& proposals) const {
    return rejection_sample(state_, envelope_height_, rng, proposals);
}

SimulationReport simulate_protocol(const ProblemSpec& spec, const SamplerConfig& config) {
    if (config.shots < 1) {
        throw InvalidArgumentError("simulate_protocol: shots must be >= 1");
    }
    const FidelityResult exact = optimal_fidelity(spec);
    const OutcomeSampler sampler(exact.state, config.envelope_grid, config.envelope_slack);

    SplitMix64 rng(config.seed);
    std::uint64_t proposals = 0;
    // Welford running mean and variance.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t shot = 0; shot < config.shots; ++shot) {
        const double x = sampler.sample(rng, proposals);
        const double value = 0.5 * (1.0 + x);
        const double delta = value - mean;
        mean += delta / static_cast<double>(shot + 1);
        m2 += delta * (value - mean);
    }
    const double stderr_value =
        config.shots > 1
            ? std::sqrt(m2 / static_cast<double>(config.shots - 1)) /
                  std::sqrt(static_cast<double>(config.shots))
            : 0.0;

    return SimulationReport{spec,
                            config,
                            mean,
                            stderr_value,
                            exact.fidelity,
                            static_cast<double>(config.shots) / static_cast<double>(proposals)};
}

}  // namespace spindir
