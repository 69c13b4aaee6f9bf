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

#include "spindir/types.hpp"

#include <string>

namespace spindir {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ok:
            return "Ok";
        case ErrorCode::bad_n:
            return "BadN";
        case ErrorCode::parity_mismatch:
            return "ParityMismatch";
        case ErrorCode::out_of_range:
            return "OutOfRange";
        case ErrorCode::no_convergence:
            return "NoConvergence";
        case ErrorCode::envelope_breach:
            return "EnvelopeBreach";
        case ErrorCode::unsupported:
            return "Unsupported";
        case ErrorCode::invalid_argument:
            return "InvalidArgument";
        case ErrorCode::internal:
            return "Internal";
    }
    return "Unknown";
}

ProblemSpec validate_spec(int n_spins, HalfInt m) {
    if (n_spins < 1) {
        throw BadNError("n_spins must be >= 1, got " + std::to_string(n_spins));
    }
    const int tm = m.twice();
    if (((tm % 2) + 2) % 2 != n_spins % 2) {
        throw ParityMismatchError("2m = " + std::to_string(tm) + " and N = " +
                                  std::to_string(n_spins) + " differ mod 2");
    }
    if (tm < 0 || tm > n_spins) {
        throw OutOfRangeError("m must lie in [0, N/2]; got 2m = " + std::to_string(tm) +
                              " for N = " + std::to_string(n_spins));
    }
    return ProblemSpec{n_spins, m};
}

HalfInt lowest_m(int n_spins) {
    if (n_spins < 1) {
        throw BadNError("n_spins must be >= 1, got " + std::to_string(n_spins));
    }
    return HalfInt::from_twice(n_spins % 2);
}

long long hilbert_dimension(int n_spins) {
    if (n_spins < 1) {
        throw BadNError("n_spins must be >= 1, got " + std::to_string(n_spins));
    }
    const long long n = n_spins;
    return n % 2 == 0 ? (n + 2) * (n + 2) / 4 : (n + 1) * (n + 3) / 4;
}

}  // namespace spindir
