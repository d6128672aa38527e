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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "oamc/synth.hpp"

namespace oamc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

constexpr double kAngleTol = 1e-12;

bool near_mod(double a, double b, double period) { return std::abs(std::remainder(a - b, period)) < kAngleTol; }

bool is_identity_map(const std::vector<int> &map) {
    for (std::size_t p = 0; p < map.size(); ++p) {
        if (map[p] != static_cast<int>(p)) return false;
    }
    return true;
}

bool is_null(const Element &e) {
    constexpr double two_pi = 2 * std::numbers::pi;
    return std::visit(overloaded{
                          [](const PhaseShifter &x) { return near_mod(x.phi, 0, two_pi); },
                          [](const BeamSplitter &x) { return near_mod(x.theta, 0, two_pi); },
                          [](const Hologram &x) { return x.charge == 0; },
                          [](const PathPermutation &x) { return is_identity_map(x.map); },
                          [](const auto &) { return false; },
                      },
                      e);
}

// a followed by b is the identity.
bool cancels(const Element &a, const Element &b) {
    constexpr double two_pi = 2 * std::numbers::pi;
    if (a.index() != b.index()) return false;
    return std::visit(
        overloaded{
            [&](const BeamSplitter &x) {
                const auto &y = std::get<BeamSplitter>(b);
                return x.path_a == y.path_a && x.path_b == y.path_b && near_mod(x.theta, -y.theta, two_pi) &&
                       near_mod(x.phi, y.phi, two_pi);
            },
            [&](const PhaseShifter &x) {
                const auto &y = std::get<PhaseShifter>(b);
                return x.path == y.path && near_mod(x.phi, -y.phi, two_pi);
            },
            [&](const DovePrism &x) {
                const auto &y = std::get<DovePrism>(b);
                return x.path == y.path && near_mod(x.alpha, y.alpha, std::numbers::pi);
            },
            [&](const Hologram &x) {
                const auto &y = std::get<Hologram>(b);
                return x.path == y.path && x.charge == -y.charge;
            },
            [&](const Mirror &x) { return x.path == std::get<Mirror>(b).path; },
            [&](const PathPermutation &x) {
                const auto &y = std::get<PathPermutation>(b);
                if (x.map.size() != y.map.size()) return false;
                for (std::size_t p = 0; p < x.map.size(); ++p) {
                    if (y.map[static_cast<std::size_t>(x.map[p])] != static_cast<int>(p)) return false;
                }
                return true;
            },
            [&](const IdealSwap &x) {
                const auto &y = std::get<IdealSwap>(b);
                return x.n_in == y.n_in && x.d_out == y.d_out && x.inverse != y.inverse;
            },
            [&](const PolSplitter &x) {
                const auto &y = std::get<PolSplitter>(b);
                return std::minmax(x.path_a, x.path_b) == std::minmax(y.path_a, y.path_b);
            },
            [&](const HalfWavePlate &x) { return x.path == std::get<HalfWavePlate>(b).path; },
        },
        a);
}

Element relabel(const Element &e, const std::vector<int> &inv) {
    auto r = [&](int p) { return p < static_cast<int>(inv.size()) ? inv[static_cast<std::size_t>(p)] : p; };
    return std::visit(overloaded{
                          [&](const BeamSplitter &x) -> Element {
                              BeamSplitter y{r(x.path_a), r(x.path_b), x.theta, x.phi};
                              if (y.path_a > y.path_b) {
                                  std::swap(y.path_a, y.path_b);
                                  y.phi = -y.phi;
                              }
                              return y;
                          },
                          [&](const PolSplitter &x) -> Element {
                              auto [lo, hi] = std::minmax(r(x.path_a), r(x.path_b));
                              return PolSplitter{lo, hi};
                          },
                          [&](const PathPermutation &x) -> Element { return x; },
                          [&](const IdealSwap &x) -> Element { return x; },
                          [&](const auto &x) -> Element {
                              auto y = x;
                              y.path = r(x.path);
                              return y;
                          },
                      },
                      e);
}

std::vector<Element> drop_nulls(const std::vector<Element> &in) {
    std::vector<Element> out;
    out.reserve(in.size());
    for (const auto &e : in) {
        if (!is_null(e)) out.push_back(e);
    }
    return out;
}

// Moves every permutation to the end of its swap-free segment.
std::vector<Element> push_permutations(const std::vector<Element> &in, int n_paths) {
    std::vector<Element> out;
    out.reserve(in.size());
    std::vector<int> sigma(static_cast<std::size_t>(n_paths));
    std::vector<int> sigma_inv(static_cast<std::size_t>(n_paths));
    bool pending = false;
    auto reset = [&] {
        std::iota(sigma.begin(), sigma.end(), 0);
        std::iota(sigma_inv.begin(), sigma_inv.end(), 0);
        pending = false;
    };
    auto flush = [&] {
        if (pending && !is_identity_map(sigma)) {
            out.push_back(PathPermutation{sigma});
        }
        reset();
    };
    reset();
    for (const auto &e : in) {
        if (const auto *perm = std::get_if<PathPermutation>(&e)) {
            for (auto &s : sigma) {
                if (s < static_cast<int>(perm->map.size())) s = perm->map[static_cast<std::size_t>(s)];
            }
            for (std::size_t y = 0; y < sigma.size(); ++y) {
                sigma_inv[static_cast<std::size_t>(sigma[y])] = static_cast<int>(y);
            }
            pending = true;
        } else if (std::holds_alternative<IdealSwap>(e)) {
            flush();
            out.push_back(e);
        } else {
            out.push_back(relabel(e, sigma_inv));
        }
    }
    flush();
    return out;
}

bool touches(const Element &e, const std::vector<int> &paths) {
    if (acts_on_all_paths(e)) return true;
    for (int p : paths_of(e)) {
        if (std::find(paths.begin(), paths.end(), p) != paths.end()) return true;
    }
    return false;
}

std::vector<Element> cancel_pairs(std::vector<Element> elems) {
    std::vector<bool> alive(elems.size(), true);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (!alive[i]) continue;
        const bool global = acts_on_all_paths(elems[i]);
        const std::vector<int> paths = paths_of(elems[i]);
        std::size_t j = i + 1;
        for (; j < elems.size(); ++j) {
            if (!alive[j]) continue;
            if (global || touches(elems[j], paths)) break;
        }
        if (j >= elems.size()) continue;
        if (cancels(elems[i], elems[j])) {
            alive[i] = false;
            alive[j] = false;
            continue;
        }
        // Mirror then Dove(g) equals Dove(-g) then Mirror.
        const auto *mirror = std::get_if<Mirror>(&elems[i]);
        const auto *dove = std::get_if<DovePrism>(&elems[j]);
        if (mirror && dove && dove->path == mirror->path) {
            const int p = mirror->path;
            const double alpha = dove->alpha;
            elems[i] = DovePrism{p, -alpha};
            elems[j] = Mirror{p};
        }
    }
    std::vector<Element> out;
    out.reserve(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (alive[i]) out.push_back(std::move(elems[i]));
    }
    return out;
}

}  // namespace

Netlist simplify(const Netlist &nl) {
    Netlist out = nl;
    int n_paths = nl.window_hint.n_paths;
    std::vector<Element> cur = nl.elements;
    for (int guard = 0; guard < 100000; ++guard) {
        std::vector<Element> next = drop_nulls(cur);
        next = push_permutations(next, n_paths);
        next = cancel_pairs(std::move(next));
        if (next == cur) break;
        cur = std::move(next);
    }
    out.elements = std::move(cur);
    return out;
}

}  // namespace oamc
