// Copyright 2026 The oamc Authors
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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oamc {

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

constexpr bool is_pow2(std::int64_t x) { return x > 0 && std::has_single_bit(static_cast<std::uint64_t>(x)); }

constexpr int log2_exact(std::int64_t x) { return std::countr_zero(static_cast<std::uint64_t>(x)); }

/// Argument outside the parameter regime a construction or formula covers.
class RegimeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline void require_pow2(std::int64_t x, const char *name, const char *where) {
    if (!is_pow2(x)) {
        throw RegimeError(std::string(where) + ": " + name + " = " + std::to_string(x) +
                          " is not a power of two");
    }
}

}  // namespace oamc
