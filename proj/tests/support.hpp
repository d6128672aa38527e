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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "oamc/blocks.hpp"
#include "oamc/elements.hpp"

namespace oamc::test {

/// Seeded generator for property tests.
class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double angle() { return real(-std::numbers::pi, std::numbers::pi); }
    bool coin() { return integer(0, 1) == 1; }

    /// Haar unitary: complex Gaussian columns, modified Gram-Schmidt.
    CMatrix unitary(int d) {
        std::normal_distribution<double> g(0.0, 1.0);
        CMatrix m(d, d);
        for (int c = 0; c < d; ++c) {
            for (int r = 0; r < d; ++r) m(r, c) = Complex(g(rng_), g(rng_));
        }
        for (int c = 0; c < d; ++c) {
            for (int p = 0; p < c; ++p) {
                Complex proj(0, 0);
                for (int r = 0; r < d; ++r) proj += std::conj(m(r, p)) * m(r, c);
                for (int r = 0; r < d; ++r) m(r, c) -= proj * m(r, p);
            }
            double norm = 0;
            for (int r = 0; r < d; ++r) norm += std::norm(m(r, c));
            norm = std::sqrt(norm);
            for (int r = 0; r < d; ++r) m(r, c) /= norm;
        }
        return m;
    }

    std::vector<int> permutation(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
        std::shuffle(p.begin(), p.end(), rng_);
        return p;
    }

    std::mt19937_64 &engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

/// |q> -> |q + k mod d>, built entry by entry.
inline CMatrix shift_oracle(int d, int k) {
    CMatrix m = CMatrix::Zero(d, d);
    for (int q = 0; q < d; ++q) m(((q + k) % d + d) % d, q) = 1;
    return m;
}

/// F_jk = exp(2 pi i jk / d) / sqrt(d).
inline CMatrix dft_oracle(int d) {
    CMatrix m(d, d);
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            const double ang = 2 * std::numbers::pi * static_cast<double>(j * k) / d;
            m(j, k) = Complex(std::cos(ang), std::sin(ang)) / std::sqrt(static_cast<double>(d));
        }
    }
    return m;
}

/// Plain repeated product.
inline CMatrix power_oracle(const CMatrix &u, int k) {
    CMatrix r = CMatrix::Identity(u.rows(), u.cols());
    for (int i = 0; i < k; ++i) r = u * r;
    return r;
}

/// Brute-force min over a phase grid of max |a - e^{it} b|.
inline double grid_distance(const CMatrix &a, const CMatrix &b, int steps = 20000) {
    double best = 1e300;
    for (int s = 0; s < steps; ++s) {
        const double t = 2 * std::numbers::pi * s / steps;
        const Complex ph(std::cos(t), std::sin(t));
        best = std::min(best, (a - ph * b).cwiseAbs().maxCoeff());
    }
    return best;
}

/// floor division / modulo written independently of the library.
inline std::int64_t fdiv(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(std::floor(static_cast<double>(a) / static_cast<double>(b)));
}
inline std::int64_t fmod_pos(std::int64_t a, std::int64_t b) { return a - b * fdiv(a, b); }

/// Output amplitudes of one basis input, simulated in the required window.
inline StateVector propagate(const Netlist &nl, const Mode &in) {
    const ModeWindow w = required_window(
        nl, ModeWindow(in.oam, in.oam, std::max(nl.window_hint.n_paths, in.path + 1), in.pol.has_value()));
    StateVector out = apply_netlist(nl, basis_state(w, in));
    out.prune(1e-12);
    return out;
}

/// Single-mode output check: |amplitude on `expect`| within tol of 1.
inline bool maps_to(const Netlist &nl, const Mode &in, const Mode &expect, double tol = 1e-9) {
    const StateVector out = propagate(nl, in);
    return std::abs(std::abs(out.amplitude(expect)) - 1.0) <= tol;
}

/// Random element on n_paths paths (no swaps, no polarization).
inline Element random_element(Gen &g, int n_paths) {
    const int p = g.integer(0, n_paths - 1);
    switch (g.integer(0, 5)) {
    case 0: {
        int q = g.integer(0, n_paths - 2);
        if (q >= p) ++q;
        return BeamSplitter{p, q, g.angle(), g.angle()};
    }
    case 1:
        return PhaseShifter{p, g.angle()};
    case 2:
        return DovePrism{p, g.angle()};
    case 3:
        return Hologram{p, g.integer(-2, 2)};
    case 4:
        return Mirror{p};
    default:
        return PathPermutation{g.permutation(n_paths)};
    }
}

/// Random sequence of blocks and elements, with inverse pairs nested inside so
/// that cancellations are available: X Y Y^-1 Z, recursively.
inline std::vector<Element> random_chunk(Gen &g, int n_paths, int depth) {
    std::vector<Element> out;
    const int parts = g.integer(1, 3);
    for (int i = 0; i < parts; ++i) {
        switch (g.integer(0, 3)) {
        case 0: {
            const int a = g.integer(0, n_paths - 2);
            const int b = g.integer(a + 1, n_paths - 1);
            const std::int64_t k = std::int64_t{1} << g.integer(0, 2);
            if (g.coin()) {
                append_exchanger(out, k, a, b);
            } else {
                append_exchanger_inv(out, k, a, b);
            }
            break;
        }
        case 1: {
            const int d = n_paths >= 4 && g.coin() ? 4 : 2;
            const int off = g.integer(0, n_paths - d);
            if (g.coin()) {
                append_sorter(out, d, 1, off);
            } else {
                append_sorter_inv(out, d, 1, off);
            }
            break;
        }
        default:
            out.push_back(random_element(g, n_paths));
        }
    }
    if (depth > 0) {
        std::vector<Element> inner = random_chunk(g, n_paths, depth - 1);
        Netlist tmp{"t", ModeWindow(0, 0, n_paths), inner, {}};
        const Netlist inv = inverse(tmp);
        out.insert(out.end(), inner.begin(), inner.end());
        if (g.coin()) out.push_back(random_element(g, n_paths));
        out.insert(out.end(), inv.elements.begin(), inv.elements.end());
        const auto tail = random_chunk(g, n_paths, 0);
        out.insert(out.end(), tail.begin(), tail.end());
    }
    return out;
}

inline Netlist random_composition(Gen &g, int n_paths) {
    Netlist nl{"random", ModeWindow(-2, 2, n_paths), random_chunk(g, n_paths, g.integer(1, 3)), {}};
    return nl;
}

/// Columns for every mode of `in` over a window covering both netlists' reach.
inline std::pair<CMatrix, CMatrix> joint_transfer(const Netlist &a, const Netlist &b, const ModeWindow &in) {
    const ModeWindow wa = required_window(a, in);
    const ModeWindow wb = required_window(b, in);
    const ModeWindow w(std::min(wa.oam_lo, wb.oam_lo), std::max(wa.oam_hi, wb.oam_hi),
                       std::max(wa.n_paths, wb.n_paths), in.with_pol);
    const auto modes = in.modes();
    return {transfer_columns(a, w, modes), transfer_columns(b, w, modes)};
}

}  // namespace oamc::test
