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

#include <cstdint>

#include "spindir/types.hpp"

namespace spindir {

/// Small seedable 64-bit generator (splitmix64). The single sequential stream
/// is the normative draw order; chunked parallel runs must derive per-chunk
/// seeds as seed XOR chunk-index.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

struct SamplerConfig {
    std::uint64_t seed = 0;
    std::uint64_t shots = 1;
    int envelope_grid = 4096;
    double envelope_slack = 1.000001;
};

/// One protocol run: exact fidelity from the eigenvalue route next to the
/// Monte Carlo estimate, its standard error, and the rejection-sampler
/// acceptance fraction. Deterministic function of (spec, config).
struct SimulationReport {
    ProblemSpec spec;
    SamplerConfig config;
    double mean_fidelity_estimate = 0.0;
    double standard_error = 0.0;  // sample stddev / sqrt(shots); 0 for shots = 1
    double exact_fidelity = 0.0;
    double accepted_fraction = 0.0;
};

/// Draws one outcome x in [-1, 1] with density p(x) by rejection against a
/// uniform envelope of the given height. Each proposal consumes exactly two
/// rng draws (x, then the acceptance variate). Throws EnvelopeBreachError if
/// a proposal density exceeds the envelope.
double rejection_sample(const SignalState& state, double envelope_height, SplitMix64& rng,
                        std::uint64_t& proposals);

/// Rejection sampler for a signal state's outcome density. The envelope is
/// uniform with height max(p over an envelope_grid-point grid including both
/// endpoints) * envelope_slack. Since |d^(j)_{mm}| peaks at x = 1, the grid
/// maximum is the exact maximum and the envelope is never undercut.
class OutcomeSampler {
  public:
    OutcomeSampler(SignalState state, int envelope_grid, double envelope_slack);

    double envelope_height() const { return envelope_height_; }
    double sample(SplitMix64& rng, std::uint64_t& proposals) const;

  private:
    SignalState state_;
    double envelope_height_;
};

/// Solves for the optimal state of `spec`, draws config.shots outcomes, and
/// reports the fidelity estimate mean((1+x)/2) with its standard error.
SimulationReport simulate_protocol(const ProblemSpec& spec, const SamplerConfig& config);

}  // namespace spindir
