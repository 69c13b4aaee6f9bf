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

#include <stdexcept>
#include <string>

namespace spindir {

/// Stable error codes shared between the C++ exceptions and the C API.
enum class ErrorCode : int {
    ok = 0,
    bad_n = 1,
    parity_mismatch = 2,
    out_of_range = 3,
    no_convergence = 4,
    envelope_breach = 5,
    unsupported = 6,
    invalid_argument = 7,
    internal = 8,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

/// Signal size N is not a positive integer.
struct BadNError : Error {
    explicit BadNError(const std::string& what) : Error(ErrorCode::bad_n, what) {}
};

/// 2m and N differ mod 2, so the ladder j = m, m+1, ..., N/2 does not close.
struct ParityMismatchError : Error {
    explicit ParityMismatchError(const std::string& what) : Error(ErrorCode::parity_mismatch, what) {}
};

/// m outside [0, N/2].
struct OutOfRangeError : Error {
    explicit OutOfRangeError(const std::string& what) : Error(ErrorCode::out_of_range, what) {}
};

/// An iterative solver hit its iteration cap or produced a degenerate result.
struct NoConvergenceError : Error {
    explicit NoConvergenceError(const std::string& what) : Error(ErrorCode::no_convergence, what) {}
};

/// A rejection-sampling proposal exceeded the precomputed envelope height.
struct EnvelopeBreachError : Error {
    explicit EnvelopeBreachError(const std::string& what) : Error(ErrorCode::envelope_breach, what) {}
};

/// The request is outside the documented operating range of the routine.
struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& what) : Error(ErrorCode::unsupported, what) {}
};

struct InvalidArgumentError : Error {
    explicit InvalidArgumentError(const std::string& what) : Error(ErrorCode::invalid_argument, what) {}
};

}  // namespace spindir
