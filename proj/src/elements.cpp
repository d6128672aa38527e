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

#include "oamc/elements.hpp"

#include <algorithm>
#include <numeric>

#include "oamc/intmath.hpp"

namespace oamc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void check_path(int p, int n_paths, const std::string &what) {
    if (p < 0 || p >= n_paths) {
        throw std::invalid_argument(what + ": path " + std::to_string(p) + " outside 0.." +
                                    std::to_string(n_paths - 1));
    }
}

}  // namespace

std::string tag(const Element &e) {
    return std::visit(overloaded{
                          [](const BeamSplitter &) { return std::string("bs"); },
                          [](const PhaseShifter &) { return std::string("phase"); },
                          [](const DovePrism &) { return std::string("dove"); },
                          [](const Hologram &) { return std::string("holo"); },
                          [](const Mirror &) { return std::string("mirror"); },
                          [](const PathPermutation &) { return std::string("perm"); },
                          [](const IdealSwap &) { return std::string("ideal_swap"); },
                          [](const PolSplitter &) { return std::string("pbs"); },
                          [](const HalfWavePlate &) { return std::string("hwp"); },
                      },
                      e);
}

std::vector<int> paths_of(const Element &e) {
    return std::visit(overloaded{
                          [](const BeamSplitter &x) { return std::vector<int>{x.path_a, x.path_b}; },
                          [](const PhaseShifter &x) { return std::vector<int>{x.path}; },
                          [](const DovePrism &x) { return std::vector<int>{x.path}; },
                          [](const Hologram &x) { return std::vector<int>{x.path}; },
                          [](const Mirror &x) { return std::vector<int>{x.path}; },
                          [](const PathPermutation &) { return std::vector<int>{}; },
                          [](const IdealSwap &) { return std::vector<int>{}; },
                          [](const PolSplitter &x) { return std::vector<int>{x.path_a, x.path_b}; },
                          [](const HalfWavePlate &x) { return std::vector<int>{x.path}; },
                      },
                      e);
}

bool acts_on_all_paths(const Element &e) {
    return std::holds_alternative<PathPermutation>(e) || std::holds_alternative<IdealSwap>(e);
}

Element inverse(const Element &e) {
    return std::visit(overloaded{
                          [](const BeamSplitter &x) -> Element {
                              return BeamSplitter{x.path_a, x.path_b, -x.theta, x.phi};
                          },
                          [](const PhaseShifter &x) -> Element { return PhaseShifter{x.path, -x.phi}; },
                          [](const DovePrism &x) -> Element { return x; },
                          [](const Hologram &x) -> Element { return Hologram{x.path, -x.charge}; },
                          [](const Mirror &x) -> Element { return x; },
                          [](const PathPermutation &x) -> Element {
                              PathPermutation inv;
                              inv.map.assign(x.map.size(), 0);
                              for (std::size_t p = 0; p < x.map.size(); ++p) {
                                  inv.map[static_cast<std::size_t>(x.map[p])] = static_cast<int>(p);
                              }
                              return inv;
                          },
                          [](const IdealSwap &x) -> Element { return IdealSwap{x.n_in, x.d_out, !x.inverse}; },
                          [](const PolSplitter &x) -> Element { return x; },
                          [](const HalfWavePlate &x) -> Element { return x; },
                      },
                      e);
}

void validate(const Element &e, int n_paths) {
    std::visit(overloaded{
                   [&](const BeamSplitter &x) {
                       check_path(x.path_a, n_paths, "bs");
                       check_path(x.path_b, n_paths, "bs");
                       if (x.path_a == x.path_b) {
                           throw std::invalid_argument("bs: both ports on path " + std::to_string(x.path_a));
                       }
                   },
                   [&](const PolSplitter &x) {
                       check_path(x.path_a, n_paths, "pbs");
                       check_path(x.path_b, n_paths, "pbs");
                       if (x.path_a == x.path_b) {
                           throw std::invalid_argument("pbs: both ports on path " + std::to_string(x.path_a));
                       }
                   },
                   [&](const PathPermutation &x) {
                       if (static_cast<int>(x.map.size()) > n_paths) {
                           throw std::invalid_argument("perm: map longer than the path count");
                       }
                       std::vector<bool> seen(x.map.size(), false);
                       for (int target : x.map) {
                           if (target < 0 || target >= static_cast<int>(x.map.size()) ||
                               seen[static_cast<std::size_t>(target)]) {
                               throw std::invalid_argument("perm: map is not a bijection on 0.." +
                                                           std::to_string(x.map.size() - 1));
                           }
                           seen[static_cast<std::size_t>(target)] = true;
                       }
                   },
                   [&](const IdealSwap &x) {
                       if (!is_pow2(x.n_in) || !is_pow2(x.d_out)) {
                           throw std::invalid_argument("ideal_swap: n and d must be powers of two");
                       }
                       if (std::max(x.n_in, x.d_out) > n_paths) {
                           throw std::invalid_argument("ideal_swap: needs " +
                                                       std::to_string(std::max(x.n_in, x.d_out)) + " paths");
                       }
                   },
                   [&](const auto &x) {
                       for (int p : paths_of(Element{x})) {
                           check_path(p, n_paths, tag(Element{x}));
                       }
                   },
               },
               e);
}

void Netlist::validate() const {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        try {
            oamc::validate(elements[i], window_hint.n_paths);
        } catch (const std::invalid_argument &err) {
            throw std::invalid_argument("element " + std::to_string(i) + ": " + err.what());
        }
    }
}

std::string Netlist::annotation(const std::string &key, const std::string &fallback) const {
    auto it = annotations.find(key);
    return it == annotations.end() ? fallback : it->second;
}

Netlist inverse(const Netlist &nl) {
    Netlist out = nl;
    out.name = nl.name + "_inv";
    out.elements.clear();
    out.elements.reserve(nl.elements.size());
    for (auto it = nl.elements.rbegin(); it != nl.elements.rend(); ++it) {
        out.elements.push_back(inverse(*it));
    }
    return out;
}

Netlist concat(const Netlist &a, const Netlist &b) {
    Netlist out = a;
    out.window_hint.oam_lo = std::min(a.window_hint.oam_lo, b.window_hint.oam_lo);
    out.window_hint.oam_hi = std::max(a.window_hint.oam_hi, b.window_hint.oam_hi);
    out.window_hint.n_paths = std::max(a.window_hint.n_paths, b.window_hint.n_paths);
    out.window_hint.with_pol = a.window_hint.with_pol || b.window_hint.with_pol;
    out.elements.insert(out.elements.end(), b.elements.begin(), b.elements.end());
    return out;
}

Netlist shift_paths(const Netlist &nl, int offset, int total_paths) {
    Netlist out = nl;
    out.window_hint.n_paths = total_paths;
    for (auto &e : out.elements) {
        std::visit(overloaded{
                       [&](BeamSplitter &x) {
                           x.path_a += offset;
                           x.path_b += offset;
                       },
                       [&](PolSplitter &x) {
                           x.path_a += offset;
                           x.path_b += offset;
                       },
                       [&](PathPermutation &x) {
                           std::vector<int> map(static_cast<std::size_t>(total_paths));
                           std::iota(map.begin(), map.end(), 0);
                           for (std::size_t p = 0; p < x.map.size(); ++p) {
                               map[p + static_cast<std::size_t>(offset)] = x.map[p] + offset;
                           }
                           x.map = std::move(map);
                       },
                       [&](IdealSwap &) {
                           if (offset != 0) {
                               throw std::invalid_argument("shift_paths: ideal_swap cannot be relocated");
                           }
                       },
                       [&](auto &x) { x.path += offset; },
                   },
                   e);
    }
    out.validate();
    return out;
}

}  // namespace oamc
