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
#include <optional>

#include "oamc/elements.hpp"
#include "oamc/intmath.hpp"

namespace oamc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

constexpr double kNormTol = 1e-9;

struct Interval {
    std::int64_t lo;
    std::int64_t hi;
};

Interval hull(const Interval &a, const Interval &b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

std::optional<Interval> hull(const std::optional<Interval> &a, const std::optional<Interval> &b) {
    if (!a) return b;
    if (!b) return a;
    return hull(*a, *b);
}

Interval swap_interval(const IdealSwap &s, Interval in) {
    const std::int64_t n = s.n_in;
    const std::int64_t d = s.d_out;
    if (n <= d) {
        const std::int64_t c = d / n;
        if (!s.inverse) {
            return {d * floor_div(in.lo, d), c * (n * floor_div(in.hi, d) + n - 1)};
        }
        std::int64_t a_lo = floor_div(floor_div(in.lo, c), n);
        std::int64_t a_hi = floor_div(floor_div(in.hi, c), n);
        return {a_lo * d, a_hi * d + d - 1};
    }
    const std::int64_t c = n / d;
    if (!s.inverse) {
        std::int64_t m_lo = floor_div(in.lo, c);
        std::int64_t m_hi = floor_div(in.hi, c);
        return {n * floor_div(m_lo, d), n * floor_div(m_hi, d) + n - 1};
    }
    std::int64_t a_lo = floor_div(in.lo, n);
    std::int64_t a_hi = floor_div(in.hi, n);
    return {c * a_lo * d, c * (a_hi * d + d - 1)};
}

}  // namespace

LeakageError::LeakageError(const Mode &input, const std::string &detail)
    : std::runtime_error("leakage for input " + to_string(input) + ": " + detail), input_(input) {}

Mode ideal_swap_action(const IdealSwap &s, const Mode &in) {
    const std::int64_t n = s.n_in;
    const std::int64_t d = s.d_out;
    Mode out = in;
    auto fail = [&](const std::string &why) {
        return SimulationError("ideal_swap(n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                               (s.inverse ? ", inverse" : "") + ") input " + to_string(in) + ": " + why);
    };
    if (!s.inverse) {
        if (in.path >= n) {
            throw fail("path must be < n");
        }
        std::int64_t m = in.oam;
        if (n > d) {
            if (floor_mod(in.oam, n / d) != 0) {
                throw fail("OAM is not a multiple of n/d = " + std::to_string(n / d));
            }
            m = in.oam / (n / d);
            out.oam = n * floor_div(m, d) + in.path;
        } else {
            out.oam = (d / n) * (n * floor_div(m, d) + in.path);
        }
        out.path = static_cast<int>(floor_mod(m, d));
        return out;
    }
    if (in.path >= d) {
        throw fail("path must be < d");
    }
    if (n <= d) {
        const std::int64_t c = d / n;
        if (floor_mod(in.oam, c) != 0) {
            throw fail("OAM is not a multiple of d/n = " + std::to_string(c));
        }
        std::int64_t v = in.oam / c;
        out.path = static_cast<int>(floor_mod(v, n));
        out.oam = floor_div(v, n) * d + in.path;
    } else {
        out.path = static_cast<int>(floor_mod(in.oam, n));
        out.oam = (n / d) * (floor_div(in.oam, n) * d + in.path);
    }
    return out;
}

StateVector apply_element(const Element &e, const StateVector &psi) {
    StateVector out(psi.window());
    for (const auto &[mode, amp] : psi.amplitudes()) {
        std::visit(overloaded{
                       [&](const BeamSplitter &x) {
                           const double c = std::cos(x.theta);
                           const double s = std::sin(x.theta);
                           if (mode.path == x.path_a) {
                               out.add(mode, c * amp);
                               out.add(Mode{mode.oam, x.path_b, mode.pol},
                                       Complex(0, s) * std::polar(1.0, -x.phi) * amp);
                           } else if (mode.path == x.path_b) {
                               out.add(Mode{mode.oam, x.path_a, mode.pol},
                                       Complex(0, s) * std::polar(1.0, x.phi) * amp);
                               out.add(mode, c * amp);
                           } else {
                               out.add(mode, amp);
                           }
                       },
                       [&](const PhaseShifter &x) {
                           out.add(mode, mode.path == x.path ? std::polar(1.0, x.phi) * amp : amp);
                       },
                       [&](const DovePrism &x) {
                           if (mode.path == x.path) {
                               const double angle = -2.0 * static_cast<double>(mode.oam) * x.alpha;
                               out.add(Mode{-mode.oam, mode.path, mode.pol}, std::polar(1.0, angle) * amp);
                           } else {
                               out.add(mode, amp);
                           }
                       },
                       [&](const Hologram &x) {
                           out.add(mode.path == x.path ? Mode{mode.oam + x.charge, mode.path, mode.pol} : mode, amp);
                       },
                       [&](const Mirror &x) {
                           out.add(mode.path == x.path ? Mode{-mode.oam, mode.path, mode.pol} : mode, amp);
                       },
                       [&](const PathPermutation &x) {
                           Mode m = mode;
                           if (m.path < static_cast<int>(x.map.size())) {
                               m.path = x.map[static_cast<std::size_t>(m.path)];
                           }
                           out.add(m, amp);
                       },
                       [&](const IdealSwap &x) { out.add(ideal_swap_action(x, mode), amp); },
                       [&](const PolSplitter &x) {
                           if (!mode.pol) {
                               throw SimulationError("pbs acting on a mode without polarization");
                           }
                           Mode m = mode;
                           if (*m.pol == Pol::V) {
                               if (m.path == x.path_a) {
                                   m.path = x.path_b;
                               } else if (m.path == x.path_b) {
                                   m.path = x.path_a;
                               }
                           }
                           out.add(m, amp);
                       },
                       [&](const HalfWavePlate &x) {
                           if (!mode.pol) {
                               throw SimulationError("hwp acting on a mode without polarization");
                           }
                           Mode m = mode;
                           if (m.path == x.path) {
                               m.pol = *m.pol == Pol::H ? Pol::V : Pol::H;
                           }
                           out.add(m, amp);
                       },
                   },
                   e);
    }
    out.prune();
    return out;
}

StateVector apply_netlist(const Netlist &nl, const StateVector &psi) {
    StateVector cur = psi;
    for (const auto &e : nl.elements) {
        cur = apply_element(e, cur);
    }
    return cur;
}

ModeWindow required_window(const Netlist &nl, const ModeWindow &input_window) {
    const int n_paths = std::max(input_window.n_paths, nl.window_hint.n_paths);
    std::vector<std::optional<Interval>> cur(static_cast<std::size_t>(n_paths));
    const Interval in{input_window.oam_lo, input_window.oam_hi};
    for (int p = 0; p < input_window.n_paths; ++p) {
        cur[static_cast<std::size_t>(p)] = in;
    }
    Interval total = in;
    auto at = [&](int p) -> std::optional<Interval> & { return cur.at(static_cast<std::size_t>(p)); };

    for (const auto &e : nl.elements) {
        std::visit(overloaded{
                       [&](const BeamSplitter &x) {
                           auto h = hull(at(x.path_a), at(x.path_b));
                           at(x.path_a) = h;
                           at(x.path_b) = h;
                       },
                       [&](const PolSplitter &x) {
                           auto h = hull(at(x.path_a), at(x.path_b));
                           at(x.path_a) = h;
                           at(x.path_b) = h;
                       },
                       [&](const PhaseShifter &) {},
                       [&](const HalfWavePlate &) {},
                       [&](const DovePrism &x) {
                           if (auto &iv = at(x.path)) iv = Interval{-iv->hi, -iv->lo};
                       },
                       [&](const Mirror &x) {
                           if (auto &iv = at(x.path)) iv = Interval{-iv->hi, -iv->lo};
                       },
                       [&](const Hologram &x) {
                           if (auto &iv = at(x.path)) iv = Interval{iv->lo + x.charge, iv->hi + x.charge};
                       },
                       [&](const PathPermutation &x) {
                           auto next = cur;
                           for (std::size_t p = 0; p < x.map.size(); ++p) {
                               next[static_cast<std::size_t>(x.map[p])] = cur[p];
                           }
                           cur = std::move(next);
                       },
                       [&](const IdealSwap &x) {
                           std::optional<Interval> all;
                           for (const auto &iv : cur) all = hull(all, iv);
                           const int out_paths = x.inverse ? x.n_in : x.d_out;
                           std::optional<Interval> image;
                           if (all) image = swap_interval(x, *all);
                           for (int p = 0; p < n_paths; ++p) {
                               at(p) = p < out_paths ? image : std::nullopt;
                           }
                       },
                   },
                   e);
        for (const auto &iv : cur) {
            if (iv) total = hull(total, *iv);
        }
    }
    return ModeWindow(total.lo, total.hi, n_paths, input_window.with_pol);
}

CMatrix transfer_columns(const Netlist &nl, const ModeWindow &window, std::span<const Mode> inputs) {
    CMatrix t = CMatrix::Zero(static_cast<Eigen::Index>(window.size()), static_cast<Eigen::Index>(inputs.size()));
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        const Mode &in = inputs[j];
        StateVector out(window);
        try {
            out = apply_netlist(nl, basis_state(window, in));
        } catch (const WindowError &err) {
            throw LeakageError(in, err.what());
        }
        if (out.norm() < 1 - kNormTol) {
            throw LeakageError(in, "output norm " + std::to_string(out.norm()));
        }
        for (const auto &[mode, amp] : out.amplitudes()) {
            t(static_cast<Eigen::Index>(window.index_of(mode)), static_cast<Eigen::Index>(j)) = amp;
        }
    }
    return t;
}

CMatrix transfer_matrix(const Netlist &nl, const ModeWindow &window) {
    auto modes = window.modes();
    return transfer_columns(nl, window, modes);
}

CMatrix subspace_transfer(const Netlist &nl, std::span<const Mode> inputs, std::span<const Mode> outputs) {
    if (inputs.empty()) {
        return CMatrix(static_cast<Eigen::Index>(outputs.size()), 0);
    }
    std::int64_t lo = inputs.front().oam;
    std::int64_t hi = lo;
    int paths = nl.window_hint.n_paths;
    for (const auto &m : inputs) {
        lo = std::min(lo, m.oam);
        hi = std::max(hi, m.oam);
        paths = std::max(paths, m.path + 1);
    }
    for (const auto &m : outputs) {
        lo = std::min(lo, m.oam);
        hi = std::max(hi, m.oam);
        paths = std::max(paths, m.path + 1);
    }
    const bool pol = inputs.front().pol.has_value();
    const ModeWindow window = required_window(nl, ModeWindow(lo, hi, paths, pol));
    CMatrix block = CMatrix::Zero(static_cast<Eigen::Index>(outputs.size()), static_cast<Eigen::Index>(inputs.size()));
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        StateVector out(window);
        try {
            out = apply_netlist(nl, basis_state(window, inputs[j]));
        } catch (const WindowError &err) {
            throw LeakageError(inputs[j], err.what());
        }
        for (std::size_t i = 0; i < outputs.size(); ++i) {
            block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = out.amplitude(outputs[i]);
        }
    }
    return block;
}

std::vector<Mode> oam_ladder(std::int64_t oam_lo, int count, int path, std::int64_t stride) {
    std::vector<Mode> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        out.push_back(Mode{oam_lo + stride * i, path, std::nullopt});
    }
    return out;
}

}  // namespace oamc
