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

#include <numbers>
#include <vector>

#include "oamc/elements.hpp"

namespace oamc {

/// Phases that make the exchanger a phase-free permutation on its valid
/// inputs: the Leach arm phase and the port-1 corrections before and after
/// the interferometer.
struct ExchangerCalibration {
    double leach_phase;
    double input_phase;
    double output_phase;
};

inline constexpr ExchangerCalibration kExchangerCalibration{std::numbers::pi, -std::numbers::pi / 2,
                                                           -std::numbers::pi / 2};

/// Recovers the calibration numerically: grid search plus golden-section
/// refinement of the Leach phase for full routing, then port phases from the
/// simulated contract amplitudes.
ExchangerCalibration calibrate_exchanger(int k = 1);

/// Two-path Mach-Zehnder on paths 0/1: BS, [Dove(dove_alpha), Mirror,
/// PhaseShifter(alpha)] on path 1, BS.
Netlist leach(double alpha, double dove_alpha);

/// E_k on ports (port0, port1). For OAM m with m = 0 mod k:
///   E_k |m>|p> = |m - t k + p k>|t>,  t = floor(m/k) mod 2.
void append_exchanger(std::vector<Element> &out, std::int64_t k, int port0, int port1,
                      const ExchangerCalibration &cal = kExchangerCalibration);
/// Exact inverse of append_exchanger, with the Dove arm written as
/// [Dove(-pi/2k), Mirror].
void append_exchanger_inv(std::vector<Element> &out, std::int64_t k, int port0, int port1,
                          const ExchangerCalibration &cal = kExchangerCalibration);

Netlist exchanger(std::int64_t k);
Netlist exchanger_inv(std::int64_t k);

/// Binary tree of exchangers with orders spacing * 2^s, s = 0..log2(d)-1:
///   |spacing*m>|0> -> |spacing*d*floor(m/d)>|m mod d>.
/// spacing = 1 is the plain sorter S_d.
void append_sorter(std::vector<Element> &out, int d, std::int64_t spacing, int path_offset);
void append_sorter_inv(std::vector<Element> &out, int d, std::int64_t spacing, int path_offset);

/// S_d |m>|0> = |d floor(m/d)>|m mod d> for every integer m.
Netlist sorter(int d);
Netlist sorter_inv(int d);

/// Single IdealSwap element; see ideal_swap_action for the semantics.
Netlist swap_ideal(int n, int d);
Netlist swap_ideal_inv(int n, int d);

/// Element-level swap on n*d paths: per-input-path sorters, a grid
/// permutation, per-output-path inverse sorters. Matches swap_ideal on its
/// valid inputs (paths < n; OAM multiple of n/d when n > d).
Netlist swap_expanded(int n, int d);

enum class BlockKind { exchanger, exchanger_inv, leach, sorter, sorter_inv, swap_ideal, swap_expanded };

struct BlockSpec {
    BlockKind kind = BlockKind::exchanger;
    std::int64_t k = 1;  // exchanger order
    int n = 0;           // sorter dimension / swap inputs
    int d = 0;           // swap outputs
    double alpha = 0;    // leach arm phase
    double dove_alpha = 0;
};

Netlist build(const BlockSpec &spec);

}  // namespace oamc
