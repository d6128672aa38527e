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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oamc/numerics.hpp"

namespace oamc {

enum class Pol : std::uint8_t { H = 0, V = 1 };

/// One basis label |oam>_O |path>_P (|pol>).
struct Mode {
    std::int64_t oam = 0;
    int path = 0;
    std::optional<Pol> pol;

    // Lexicographic (path, oam, pol), the window enumeration order.
    auto operator<=>(const Mode &other) const {
        if (auto c = path <=> other.path; c != 0) return c;
        if (auto c = oam <=> other.oam; c != 0) return c;
        return pol <=> other.pol;
    }
    bool operator==(const Mode &) const = default;
};

std::string to_string(const Mode &m);

class WindowError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Finite truncation of the OAM ladder times a set of paths.
struct ModeWindow {
    std::int64_t oam_lo = 0;
    std::int64_t oam_hi = 0;
    int n_paths = 1;
    bool with_pol = false;

    ModeWindow() = default;
    ModeWindow(std::int64_t lo, std::int64_t hi, int paths, bool pol = false);

    std::int64_t oam_count() const { return oam_hi - oam_lo + 1; }
    std::size_t size() const;
    bool contains(const Mode &m) const;
    /// Position in the (path, oam, pol) enumeration; throws WindowError outside.
    std::size_t index_of(const Mode &m) const;
    Mode mode_at(std::size_t index) const;
    std::vector<Mode> modes() const;

    bool operator==(const ModeWindow &) const = default;
};

std::string to_string(const ModeWindow &w);

/// Sparse photon state inside a window.
class StateVector {
  public:
    explicit StateVector(ModeWindow window) : window_(window) {}

    const ModeWindow &window() const { return window_; }
    const std::map<Mode, Complex> &amplitudes() const { return amps_; }

    Complex amplitude(const Mode &m) const;
    /// Adds to the amplitude of m; throws WindowError if m is outside the window.
    void add(const Mode &m, Complex amp);
    double norm() const;
    /// Drops entries with |amp| <= eps.
    void prune(double eps = 1e-14);
    Eigen::VectorXcd dense() const;

  private:
    ModeWindow window_;
    std::map<Mode, Complex> amps_;
};

StateVector basis_state(const ModeWindow &window, const Mode &mode);
Complex inner(const StateVector &a, const StateVector &b);

}  // namespace oamc
