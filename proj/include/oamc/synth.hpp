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

#include <optional>
#include <string>

#include "oamc/elements.hpp"
#include "oamc/numerics.hpp"

namespace oamc {

/// Path-only mesh of BeamSplitters and PhaseShifters whose transfer on
/// (oam {0}, d paths) equals u. Zero rotations are pruned, and monomial
/// inputs (permutation times phases) compile to a PathPermutation with no
/// beam splitters. At most d(d-1)/2 beam splitters.
Netlist reck_decompose(const CMatrix &u);

/// S_d^-1 . U_P . S_d, unsimplified.
Netlist universal_oam(const CMatrix &u, int d);

/// X_d^k on OAM 0..d-1: the universal construction with the cyclic path
/// permutation, then simplify. k > d/2 is the reversed xk_gate(d, d-k).
Netlist xk_gate(int d, int k);

/// Z_d^k with one Dove prism at -k pi/d and a mirror.
Netlist z_gate(int d, int k);

/// |k>_O|p>_P -> |k>_O (u^k |p>_P) for OAM 0..d-1.
Netlist controlled_u(const CMatrix &u_path, int d);
/// Same with the control ladder |m k>_O; Dove angles phi_j / (2m).
Netlist controlled_u_spaced(const CMatrix &u_path, int d, int spacing);
/// Controlled Z_n on n paths: n Dove prisms, no beam splitters.
Netlist cz_gate(int n, int d);

enum class SwapMode { ideal, expanded };

std::string to_string(SwapMode m);
SwapMode swap_mode_from_string(const std::string &s);

/// |k>_O|p>_P -> (u^p |k>_O)|p>_P via swap, controlled_u, swap^-1. For n > d
/// the OAM inputs are the multiples of n/d.
Netlist path_controlled(const CMatrix &u_oam, int n, SwapMode mode);

/// SWAP^-1 . U_P . SWAP: u applied to the OAM in each of n paths.
Netlist parallelize(const CMatrix &u, int n, SwapMode mode);

/// Peephole pass: permutations pushed to the end of each swap-free segment
/// and merged, null elements dropped, adjacent inverse pairs cancelled
/// (looking through elements on disjoint paths), and Mirror;Dove(g)
/// rewritten to Dove(-g);Mirror. Runs to a fixpoint, so it is idempotent.
Netlist simplify(const Netlist &nl);

enum class GateKind {
    universal,
    pauli_x_power,
    pauli_z_power,
    controlled_u,
    controlled_u_spaced,
    cz,
    path_controlled,
    parallelized
};

struct GateSpec {
    GateKind kind = GateKind::universal;
    int d = 2;
    int n = 1;
    int k = 1;
    int m = 1;
    std::optional<CMatrix> u;
    SwapMode swap_mode = SwapMode::ideal;
};

Netlist synthesize(const GateSpec &spec);

}  // namespace oamc
