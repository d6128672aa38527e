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

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "oamc/modes.hpp"
#include "oamc/numerics.hpp"

namespace oamc {

/// Two-path block [[cos t, i sin t e^{i phi}], [i sin t e^{-i phi}, cos t]]
/// (row = output path, column = input path). Acts identically on every OAM
/// value: the reflection-compensating mirrors are part of the device.
struct BeamSplitter {
    int path_a = 0;
    int path_b = 1;
    double theta = 0;
    double phi = 0;
    bool operator==(const BeamSplitter &) const = default;
};

struct PhaseShifter {
    int path = 0;
    double phi = 0;
    bool operator==(const PhaseShifter &) const = default;
};

/// |k> -> exp(-2 i k alpha) |-k>
struct DovePrism {
    int path = 0;
    double alpha = 0;
    bool operator==(const DovePrism &) const = default;
};

/// Spiral phase plate, |k> -> |k + charge>.
struct Hologram {
    int path = 0;
    std::int64_t charge = 0;
    bool operator==(const Hologram &) const = default;
};

/// |k> -> |-k>
struct Mirror {
    int path = 0;
    bool operator==(const Mirror &) const = default;
};

/// |p> -> |map[p]>; paths at or beyond map.size() are untouched.
struct PathPermutation {
    std::vector<int> map;
    bool operator==(const PathPermutation &) const = default;
};

/// Exact OAM/path exchange with n input and d output paths (the modulo
/// form). `inverse` selects SWAP^-1.
struct IdealSwap {
    int n_in = 2;
    int d_out = 2;
    bool inverse = false;
    bool operator==(const IdealSwap &) const = default;
};

/// H transmitted, V exchanged between path_a and path_b.
struct PolSplitter {
    int path_a = 0;
    int path_b = 1;
    bool operator==(const PolSplitter &) const = default;
};

/// Half-wave plate at 45 degrees: H <-> V.
struct HalfWavePlate {
    int path = 0;
    bool operator==(const HalfWavePlate &) const = default;
};

using Element = std::variant<BeamSplitter, PhaseShifter, DovePrism, Hologram, Mirror, PathPermutation, IdealSwap,
                             PolSplitter, HalfWavePlate>;

/// JSON tag of the element ("bs", "phase", ...).
std::string tag(const Element &e);
/// Paths the element acts on; empty for elements that act on every path.
std::vector<int> paths_of(const Element &e);
bool acts_on_all_paths(const Element &e);
Element inverse(const Element &e);
/// Throws std::invalid_argument describing the first violated invariant.
void validate(const Element &e, int n_paths);

struct Netlist {
    std::string name;
    ModeWindow window_hint;
    std::vector<Element> elements;
    std::map<std::string, std::string> annotations;

    void validate() const;
    std::string annotation(const std::string &key, const std::string &fallback = "") const;
    bool operator==(const Netlist &) const = default;
};

/// Reversed element order with every element inverted.
Netlist inverse(const Netlist &nl);
/// a then b; the window hint is the union.
Netlist concat(const Netlist &a, const Netlist &b);
/// Copy of nl with every path index p mapped to offset + p.
Netlist shift_paths(const Netlist &nl, int offset, int total_paths);

// --- simulation ----------------------------------------------------------

/// Raised when an element cannot act on a basis input (invalid swap input,
/// polarization element on a polarization-free window).
class SimulationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Amplitude left the window during simulation of `input`.
class LeakageError : public std::runtime_error {
  public:
    LeakageError(const Mode &input, const std::string &detail);
    const Mode &input() const { return input_; }

  private:
    Mode input_;
};

/// Image of |oam>|path> under an IdealSwap; throws SimulationError for
/// inputs outside the swap's valid domain.
Mode ideal_swap_action(const IdealSwap &s, const Mode &in);

StateVector apply_element(const Element &e, const StateVector &psi);
StateVector apply_netlist(const Netlist &nl, const StateVector &psi);

/// Interval bound on every OAM value reachable from input_window.
ModeWindow required_window(const Netlist &nl, const ModeWindow &input_window);

/// Column j = apply_netlist on window.mode_at(j).
CMatrix transfer_matrix(const Netlist &nl, const ModeWindow &window);
/// Columns for the given inputs only, rows over the whole window.
CMatrix transfer_columns(const Netlist &nl, const ModeWindow &window, std::span<const Mode> inputs);
/// Block <out_i| T |in_j>, simulated inside required_window of the inputs' hull.
CMatrix subspace_transfer(const Netlist &nl, std::span<const Mode> inputs, std::span<const Mode> outputs);

/// Modes |oam_lo + stride*i>|path> for i in [0, count).
std::vector<Mode> oam_ladder(std::int64_t oam_lo, int count, int path, std::int64_t stride = 1);

// --- serialization -------------------------------------------------------

class SchemaError : public std::invalid_argument {
  public:
    SchemaError(const std::string &where, const std::string &what);
    const std::string &where() const { return where_; }

  private:
    std::string where_;
};

std::string serialize(const Netlist &nl);
Netlist deserialize(const std::string &text);

/// Matrix as a JSON array of rows of [re, im] pairs (compact, one line).
std::string matrix_to_json(const CMatrix &m);
/// Inverse of matrix_to_json; SchemaError on malformed input.
CMatrix matrix_from_json(const std::string &text);

}  // namespace oamc
