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

#include <compare>

namespace spindir {

/// Exact half-integer, stored as twice its value so that angular momentum
/// labels like j = 3/2 never touch floating point until the numerical
/// boundary. All arithmetic and comparisons are exact integer operations.
class HalfInt {
  public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int twice_value) { return HalfInt(twice_value); }
    static constexpr HalfInt whole(int value) { return HalfInt(2 * value); }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double to_double() const { return 0.5 * static_cast<double>(twice_); }

    constexpr HalfInt operator+(HalfInt other) const { return HalfInt(twice_ + other.twice_); }
    constexpr HalfInt operator-(HalfInt other) const { return HalfInt(twice_ - other.twice_); }
    constexpr HalfInt operator-() const { return HalfInt(-twice_); }

    constexpr auto operator<=>(const HalfInt&) const = default;

  private:
    constexpr explicit HalfInt(int twice_value) : twice_(twice_value) {}

    int twice_ = 0;
};

}  // namespace spindir
