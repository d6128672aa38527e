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

#include "oamc/synth.hpp"

#include <cmath>
#include <stdexcept>

#include "oamc/blocks.hpp"
#include "oamc/intmath.hpp"

namespace oamc {

namespace {

void require_unitary(const CMatrix &u, const char *where) {
    if (u.rows() != u.cols() || u.rows() == 0) {
        throw std::invalid_argument(std::string(where) + ": matrix must be square and non-empty");
    }
    if (!is_unitary(u)) {
        throw std::invalid_argument(std::string(where) + ": matrix is not unitary within tolerance");
    }
}

void append(std::vector<Element> &out, const std::vector<Element> &in) { out.insert(out.end(), in.begin(), in.end()); }

Netlist swap_block(int n, int d, SwapMode mode) { return mode == SwapMode::ideal ? swap_ideal(n, d) : swap_expanded(n, d); }

int swap_paths(int n, int d, SwapMode mode) { return mode == SwapMode::ideal ? std::max(n, d) : n * d; }

// Highest OAM value of the valid swap inputs |c*k>, k < d.
std::int64_t sandwich_oam_hi(int n, int d) { return n > d ? static_cast<std::int64_t>(n / d) * (d - 1) : d - 1; }

}  // namespace

std::string to_string(SwapMode m) { return m == SwapMode::ideal ? "ideal" : "expanded"; }

SwapMode swap_mode_from_string(const std::string &s) {
    if (s == "ideal") return SwapMode::ideal;
    if (s == "expanded") return SwapMode::expanded;
    throw std::invalid_argument("unknown swap mode \"" + s + "\" (expected ideal or expanded)");
}

Netlist universal_oam(const CMatrix &u, int d) {
    require_pow2(d, "d", "universal_oam");
    require_unitary(u, "universal_oam");
    if (u.rows() != d) {
        throw std::invalid_argument("universal_oam: matrix dimension does not match d");
    }
    Netlist nl;
    nl.name = "universal_" + std::to_string(d);
    nl.window_hint = ModeWindow(0, d - 1, d);
    append_sorter(nl.elements, d, 1, 0);
    append(nl.elements, reck_decompose(u).elements);
    append_sorter_inv(nl.elements, d, 1, 0);
    nl.annotations = {{"construction", "universal"}, {"d", std::to_string(d)}};
    return nl;
}

Netlist xk_gate(int d, int k) {
    require_pow2(d, "d", "xk_gate");
    if (d < 2 || k < 1 || k > d - 1) {
        throw RegimeError("xk_gate: power k = " + std::to_string(k) + " outside 1.." + std::to_string(d - 1));
    }
    Netlist nl;
    if (2 * k > d) {
        nl = inverse(xk_gate(d, d - k));
    } else {
        nl = simplify(universal_oam(pauli_x(d, k), d));
    }
    nl.name = "xk_" + std::to_string(d) + "_" + std::to_string(k);
    nl.annotations = {{"construction", "xk"}, {"d", std::to_string(d)}, {"k", std::to_string(k)}};
    return nl;
}

Netlist z_gate(int d, int k) {
    if (d < 2) {
        throw RegimeError("z_gate: d = " + std::to_string(d) + " must be >= 2");
    }
    Netlist nl;
    nl.name = "z_" + std::to_string(d) + "_" + std::to_string(k);
    nl.window_hint = ModeWindow(0, d - 1, 1);
    if (floor_mod(k, d) == 0) {
        nl.elements = {Mirror{0}, Mirror{0}};
    } else {
        nl.elements = {DovePrism{0, -static_cast<double>(k) * std::numbers::pi / d}, Mirror{0}};
    }
    nl.annotations = {{"construction", "z"}, {"d", std::to_string(d)}, {"k", std::to_string(k)}};
    return nl;
}

Netlist controlled_u_spaced(const CMatrix &u_path, int d, int spacing) {
    require_unitary(u_path, "controlled_u");
    if (spacing < 1) {
        throw RegimeError("controlled_u_spaced: spacing must be >= 1");
    }
    if (d < 1) {
        throw RegimeError("controlled_u: OAM dimension must be >= 1");
    }
    const int n = static_cast<int>(u_path.rows());
    const EigenDecomp eig = eig_unitary(u_path);

    Netlist nl;
    nl.name = "controlled_u_" + std::to_string(n) + "_" + std::to_string(d);
    nl.window_hint = ModeWindow(0, static_cast<std::int64_t>(spacing) * (d - 1), n);
    append(nl.elements, reck_decompose(eig.m).elements);
    for (int j = 0; j < n; ++j) {
        nl.elements.push_back(DovePrism{j, eig.phases[static_cast<std::size_t>(j)] / (2.0 * spacing)});
        nl.elements.push_back(Mirror{j});
    }
    append(nl.elements, reck_decompose(eig.m.adjoint()).elements);
    nl = simplify(nl);
    nl.annotations = {{"construction", "controlled_u"},
                      {"d", std::to_string(d)},
                      {"n", std::to_string(n)},
                      {"m", std::to_string(spacing)}};
    return nl;
}

Netlist controlled_u(const CMatrix &u_path, int d) { return controlled_u_spaced(u_path, d, 1); }

Netlist cz_gate(int n, int d) {
    if (n < 1) {
        throw RegimeError("cz_gate: n must be >= 1");
    }
    Netlist nl = controlled_u(pauli_z(n), d);
    nl.name = "cz_" + std::to_string(n) + "_" + std::to_string(d);
    nl.annotations["construction"] = "cz";
    return nl;
}

Netlist path_controlled(const CMatrix &u_oam, int n, SwapMode mode) {
    require_unitary(u_oam, "path_controlled");
    const int d = static_cast<int>(u_oam.rows());
    require_pow2(n, "n", "path_controlled");
    require_pow2(d, "d", "path_controlled");
    const int paths = swap_paths(n, d, mode);

    const Netlist swap = swap_block(n, d, mode);
    // The swap places control value p at OAM (d/n) p when n < d.
    const Netlist core = controlled_u_spaced(u_oam, n, n < d ? d / n : 1);

    Netlist nl;
    nl.name = "path_controlled_" + std::to_string(n) + "_" + std::to_string(d);
    nl.window_hint = ModeWindow(0, sandwich_oam_hi(n, d), paths);
    append(nl.elements, swap.elements);
    append(nl.elements, core.elements);
    append(nl.elements, inverse(swap).elements);
    nl.annotations = {{"construction", "path_controlled"},
                      {"d", std::to_string(d)},
                      {"n", std::to_string(n)},
                      {"swap", to_string(mode)}};
    return nl;
}

Netlist parallelize(const CMatrix &u, int n, SwapMode mode) {
    require_unitary(u, "parallelize");
    const int d = static_cast<int>(u.rows());
    require_pow2(n, "n", "parallelize");
    require_pow2(d, "d", "parallelize");
    const int paths = swap_paths(n, d, mode);
    const Netlist swap = swap_block(n, d, mode);

    Netlist nl;
    nl.name = "parallelized_" + std::to_string(n) + "_" + std::to_string(d);
    nl.window_hint = ModeWindow(0, sandwich_oam_hi(n, d), paths);
    append(nl.elements, swap.elements);
    append(nl.elements, reck_decompose(u).elements);
    append(nl.elements, inverse(swap).elements);
    nl.annotations = {{"construction", "parallelized"},
                      {"d", std::to_string(d)},
                      {"n", std::to_string(n)},
                      {"swap", to_string(mode)}};
    return nl;
}

Netlist synthesize(const GateSpec &spec) {
    auto need_u = [&](const char *where) -> const CMatrix & {
        if (!spec.u) {
            throw std::invalid_argument(std::string(where) + ": gate requires a unitary");
        }
        return *spec.u;
    };
    switch (spec.kind) {
    case GateKind::universal:
        return universal_oam(need_u("universal"), spec.d);
    case GateKind::pauli_x_power:
        return xk_gate(spec.d, spec.k);
    case GateKind::pauli_z_power:
        return z_gate(spec.d, spec.k);
    case GateKind::controlled_u:
        return controlled_u(need_u("controlled_u"), spec.d);
    case GateKind::controlled_u_spaced:
        return controlled_u_spaced(need_u("controlled_u_spaced"), spec.d, spec.m);
    case GateKind::cz:
        return cz_gate(spec.n, spec.d);
    case GateKind::path_controlled:
        return path_controlled(need_u("path_controlled"), spec.n, spec.swap_mode);
    case GateKind::parallelized:
        return parallelize(need_u("parallelized"), spec.n, spec.swap_mode);
    }
    throw std::invalid_argument("synthesize: unknown gate kind");
}

}  // namespace oamc
