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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oamc/synth.hpp"

namespace oamc {

namespace {

constexpr double kNullTol = 1e-11;
constexpr double kPhaseTol = 1e-14;

struct Rotation {
    int a;
    int b;
    double theta;
    double phi;
};

// Returns the column -> row map if u is a permutation times phases.
std::optional<std::vector<int>> monomial_map(const CMatrix &u) {
    const auto n = u.rows();
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            double a = std::abs(u(r, c));
            if (a < kNullTol) continue;
            if (std::abs(a - 1) > kNullTol || map[static_cast<std::size_t>(c)] >= 0 ||
                used[static_cast<std::size_t>(r)]) {
                return std::nullopt;
            }
            map[static_cast<std::size_t>(c)] = static_cast<int>(r);
            used[static_cast<std::size_t>(r)] = true;
        }
        if (map[static_cast<std::size_t>(c)] < 0) return std::nullopt;
    }
    return map;
}

void apply_rotation(CMatrix &w, const Rotation &t) {
    const double c = std::cos(t.theta);
    const double s = std::sin(t.theta);
    const Complex to_a = Complex(0, s) * std::polar(1.0, t.phi);
    const Complex to_b = Complex(0, s) * std::polar(1.0, -t.phi);
    Eigen::RowVectorXcd ra = w.row(t.a);
    Eigen::RowVectorXcd rb = w.row(t.b);
    w.row(t.a) = c * ra + to_a * rb;
    w.row(t.b) = to_b * ra + c * rb;
}

}  // namespace

Netlist reck_decompose(const CMatrix &u) {
    if (u.rows() != u.cols()) {
        throw std::invalid_argument("reck_decompose: matrix is not square");
    }
    if (!is_unitary(u)) {
        throw std::invalid_argument("reck_decompose: matrix is not unitary within tolerance");
    }
    const int d = static_cast<int>(u.rows());
    Netlist nl;
    nl.name = "reck_" + std::to_string(d);
    nl.window_hint = ModeWindow(0, 0, std::max(d, 1));
    nl.annotations = {{"construction", "reck"}, {"d", std::to_string(d)}};

    if (auto map = monomial_map(u)) {
        bool identity = true;
        for (int c = 0; c < d; ++c) {
            const double ph = std::arg(u((*map)[static_cast<std::size_t>(c)], c));
            if (std::abs(ph) > kPhaseTol) {
                nl.elements.push_back(PhaseShifter{c, ph});
            }
            identity = identity && (*map)[static_cast<std::size_t>(c)] == c;
        }
        if (!identity) {
            nl.elements.push_back(PathPermutation{*map});
        }
        return nl;
    }

    // Null the sub-diagonal column by column from the left: T_K...T_1 U = D.
    CMatrix w = u;
    std::vector<Rotation> rotations;
    for (int j = 0; j + 1 < d; ++j) {
        for (int i = d - 1; i > j; --i) {
            const Complex xa = w(i - 1, j);
            const Complex xb = w(i, j);
            if (std::abs(xb) < kNullTol) continue;
            Rotation t{i - 1, i, std::numbers::pi / 2, 0};
            if (std::abs(xa) >= kNullTol) {
                t.theta = std::atan2(std::abs(xb), std::abs(xa));
                t.phi = std::arg(xa) - std::arg(xb) - std::numbers::pi / 2;
            }
            apply_rotation(w, t);
            rotations.push_back(t);
        }
    }

    // U = T_1^-1 ... T_K^-1 D: phases first, then the inverted rotations in reverse.
    for (int p = 0; p < d; ++p) {
        const double ph = std::arg(w(p, p));
        if (std::abs(ph) > kPhaseTol) {
            nl.elements.push_back(PhaseShifter{p, ph});
        }
    }
    for (auto it = rotations.rbegin(); it != rotations.rend(); ++it) {
        nl.elements.push_back(BeamSplitter{it->a, it->b, -it->theta, it->phi});
    }
    return nl;
}

}  // namespace oamc
