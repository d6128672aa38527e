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

#include "oamc/blocks.hpp"

#include <cmath>
#include <numeric>

#include "oamc/intmath.hpp"

namespace oamc {

namespace {

constexpr double kPi = std::numbers::pi;

void require_order(std::int64_t k, const char *where) {
    if (k < 1) {
        throw RegimeError(std::string(where) + ": exchanger order must be >= 1");
    }
    require_pow2(k, "k", where);
}

// Completes a partial injective map on 0..n-1 to a bijection, filling the
// unused sources in increasing order with the unused targets.
std::vector<int> complete_permutation(const std::vector<int> &partial, int n) {
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (std::size_t p = 0; p < partial.size(); ++p) {
        if (partial[p] >= 0) {
            map[p] = partial[p];
            used[static_cast<std::size_t>(partial[p])] = true;
        }
    }
    int next = 0;
    for (auto &m : map) {
        if (m >= 0) continue;
        while (used[static_cast<std::size_t>(next)]) ++next;
        m = next;
        used[static_cast<std::size_t>(next)] = true;
    }
    return map;
}

// Sum of |amplitude|^2 landing on the contract targets of a trial exchanger.
double routing_power(double leach_phase, std::int64_t k) {
    std::vector<Element> el;
    append_exchanger(el, k, 0, 1, ExchangerCalibration{leach_phase, 0, 0});
    Netlist nl{"trial", ModeWindow(-4 * k, 6 * k, 2), el, {}};
    const ModeWindow w = required_window(nl, ModeWindow(0, 3 * k, 2));
    double total = 0;
    for (std::int64_t m = 0; m < 4 * k; m += k) {
        for (int p = 0; p < 2; ++p) {
            const std::int64_t t = floor_mod(floor_div(m, k), 2);
            Mode target{m - t * k + p * k, static_cast<int>(t), std::nullopt};
            auto out = apply_netlist(nl, basis_state(w, Mode{m, p, std::nullopt}));
            total += std::norm(out.amplitude(target));
        }
    }
    return total;
}

}  // namespace

ExchangerCalibration calibrate_exchanger(int k) {
    constexpr int kGrid = 64;
    double best = 0;
    double best_val = -1;
    for (int i = 0; i < kGrid; ++i) {
        double a = 2 * kPi * i / kGrid;
        double v = routing_power(a, k);
        if (v > best_val) {
            best_val = v;
            best = a;
        }
    }
    // Golden-section refinement inside the neighbouring grid cells.
    const double g = (std::sqrt(5.0) - 1) / 2;
    double lo = best - 2 * kPi / kGrid;
    double hi = best + 2 * kPi / kGrid;
    double x1 = hi - g * (hi - lo);
    double x2 = lo + g * (hi - lo);
    double f1 = routing_power(x1, k);
    double f2 = routing_power(x2, k);
    for (int it = 0; it < 80; ++it) {
        if (f1 > f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = routing_power(x1, k);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = routing_power(x2, k);
        }
    }
    ExchangerCalibration cal{wrap_2pi((lo + hi) / 2), 0, 0};

    // Port phases: with port 0 uncorrected, the (p=1 -> port 0) amplitude
    // fixes the input correction and (p=0 -> port 1) the output correction.
    std::vector<Element> el;
    append_exchanger(el, k, 0, 1, cal);
    Netlist nl{"trial", ModeWindow(-4 * k, 6 * k, 2), el, {}};
    const ModeWindow w = required_window(nl, ModeWindow(0, 3 * k, 2));
    auto amp = [&](std::int64_t m, int p, std::int64_t m_out, int t) {
        return apply_netlist(nl, basis_state(w, Mode{m, p, std::nullopt})).amplitude(Mode{m_out, t, std::nullopt});
    };
    Complex to_port0 = amp(0, 1, k, 0);
    Complex to_port1 = amp(k, 0, 0, 1);
    auto principal = [](double a) { return std::remainder(a, 2 * kPi); };
    cal.input_phase = principal(-std::arg(to_port0));
    cal.output_phase = principal(-std::arg(to_port1));
    return cal;
}

Netlist leach(double alpha, double dove_alpha) {
    Netlist nl;
    nl.name = "leach";
    nl.window_hint = ModeWindow(0, 1, 2);
    nl.elements = {
        BeamSplitter{0, 1, kPi / 4, 0}, DovePrism{1, dove_alpha}, Mirror{1}, PhaseShifter{1, alpha},
        BeamSplitter{0, 1, kPi / 4, 0},
    };
    nl.annotations = {{"construction", "leach"}};
    return nl;
}

void append_exchanger(std::vector<Element> &out, std::int64_t k, int port0, int port1,
                      const ExchangerCalibration &cal) {
    const double dove = kPi / (2.0 * static_cast<double>(k));
    out.insert(out.end(), {
                              Hologram{port1, k},
                              PhaseShifter{port1, cal.input_phase},
                              BeamSplitter{port0, port1, kPi / 4, 0},
                              DovePrism{port1, dove},
                              Mirror{port1},
                              PhaseShifter{port1, cal.leach_phase},
                              BeamSplitter{port0, port1, kPi / 4, 0},
                              PhaseShifter{port1, cal.output_phase},
                              Hologram{port1, -k},
                          });
}

void append_exchanger_inv(std::vector<Element> &out, std::int64_t k, int port0, int port1,
                          const ExchangerCalibration &cal) {
    const double dove = kPi / (2.0 * static_cast<double>(k));
    out.insert(out.end(), {
                              Hologram{port1, k},
                              PhaseShifter{port1, -cal.output_phase},
                              BeamSplitter{port0, port1, -kPi / 4, 0},
                              PhaseShifter{port1, -cal.leach_phase},
                              DovePrism{port1, -dove},
                              Mirror{port1},
                              BeamSplitter{port0, port1, -kPi / 4, 0},
                              PhaseShifter{port1, -cal.input_phase},
                              Hologram{port1, -k},
                          });
}

Netlist exchanger(std::int64_t k) {
    require_order(k, "exchanger");
    Netlist nl;
    nl.name = "exchanger_" + std::to_string(k);
    nl.window_hint = ModeWindow(0, 2 * k - 1, 2);
    append_exchanger(nl.elements, k, 0, 1);
    nl.annotations = {{"construction", "exchanger"}, {"k", std::to_string(k)}};
    return nl;
}

Netlist exchanger_inv(std::int64_t k) {
    require_order(k, "exchanger_inv");
    Netlist nl;
    nl.name = "exchanger_inv_" + std::to_string(k);
    nl.window_hint = ModeWindow(0, 2 * k - 1, 2);
    append_exchanger_inv(nl.elements, k, 0, 1);
    nl.annotations = {{"construction", "exchanger_inv"}, {"k", std::to_string(k)}};
    return nl;
}

void append_sorter(std::vector<Element> &out, int d, std::int64_t spacing, int path_offset) {
    require_pow2(d, "d", "sorter");
    for (int half = 1; half < d; half *= 2) {
        for (int p = 0; p < half; ++p) {
            append_exchanger(out, spacing * half, path_offset + p, path_offset + p + half);
        }
    }
}

void append_sorter_inv(std::vector<Element> &out, int d, std::int64_t spacing, int path_offset) {
    require_pow2(d, "d", "sorter_inv");
    for (int half = d / 2; half >= 1; half /= 2) {
        for (int p = half - 1; p >= 0; --p) {
            append_exchanger_inv(out, spacing * half, path_offset + p, path_offset + p + half);
        }
    }
}

Netlist sorter(int d) {
    require_pow2(d, "d", "sorter");
    Netlist nl;
    nl.name = "sorter_" + std::to_string(d);
    nl.window_hint = ModeWindow(0, d - 1, d);
    append_sorter(nl.elements, d, 1, 0);
    nl.annotations = {{"construction", "sorter"}, {"d", std::to_string(d)}};
    return nl;
}

Netlist sorter_inv(int d) {
    require_pow2(d, "d", "sorter_inv");
    Netlist nl;
    nl.name = "sorter_inv_" + std::to_string(d);
    nl.window_hint = ModeWindow(0, d - 1, d);
    append_sorter_inv(nl.elements, d, 1, 0);
    nl.annotations = {{"construction", "sorter_inv"}, {"d", std::to_string(d)}};
    return nl;
}

Netlist swap_ideal(int n, int d) {
    require_pow2(n, "n", "swap_ideal");
    require_pow2(d, "d", "swap_ideal");
    Netlist nl;
    nl.name = "swap_ideal_" + std::to_string(n) + "_" + std::to_string(d);
    nl.window_hint = ModeWindow(0, d - 1, std::max(n, d));
    nl.elements = {IdealSwap{n, d, false}};
    nl.annotations = {{"construction", "swap_ideal"}, {"n", std::to_string(n)}, {"d", std::to_string(d)}};
    return nl;
}

Netlist swap_ideal_inv(int n, int d) {
    Netlist nl = inverse(swap_ideal(n, d));
    nl.annotations["construction"] = "swap_ideal_inv";
    return nl;
}

Netlist swap_expanded(int n, int d) {
    require_pow2(n, "n", "swap_expanded");
    require_pow2(d, "d", "swap_expanded");
    const int total = n * d;
    const std::int64_t in_spacing = std::max(1, n / d);
    const std::int64_t out_spacing = std::max(1, d / n);

    Netlist nl;
    nl.name = "swap_expanded_" + std::to_string(n) + "_" + std::to_string(d);
    nl.window_hint = ModeWindow(0, d - 1, total);

    std::vector<int> fan_out(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) fan_out[static_cast<std::size_t>(p)] = p * d;
    nl.elements.push_back(PathPermutation{complete_permutation(fan_out, total)});

    for (int p = 0; p < n; ++p) {
        append_sorter(nl.elements, d, in_spacing, p * d);
    }

    std::vector<int> grid(static_cast<std::size_t>(total));
    for (int p = 0; p < n; ++p) {
        for (int r = 0; r < d; ++r) {
            grid[static_cast<std::size_t>(p * d + r)] = r * n + p;
        }
    }
    nl.elements.push_back(PathPermutation{grid});

    for (int r = 0; r < d; ++r) {
        append_sorter_inv(nl.elements, n, out_spacing, r * n);
    }

    std::vector<int> fan_in(static_cast<std::size_t>(total), -1);
    for (int r = 0; r < d; ++r) fan_in[static_cast<std::size_t>(r * n)] = r;
    nl.elements.push_back(PathPermutation{complete_permutation(fan_in, total)});

    nl.annotations = {{"construction", "swap_expanded"}, {"n", std::to_string(n)}, {"d", std::to_string(d)}};
    return nl;
}

Netlist build(const BlockSpec &spec) {
    switch (spec.kind) {
    case BlockKind::exchanger:
        return exchanger(spec.k);
    case BlockKind::exchanger_inv:
        return exchanger_inv(spec.k);
    case BlockKind::leach:
        return leach(spec.alpha, spec.dove_alpha);
    case BlockKind::sorter:
        return sorter(spec.n);
    case BlockKind::sorter_inv:
        return sorter_inv(spec.n);
    case BlockKind::swap_ideal:
        return swap_ideal(spec.n, spec.d);
    case BlockKind::swap_expanded:
        return swap_expanded(spec.n, spec.d);
    }
    throw std::invalid_argument("build: unknown block kind");
}

}  // namespace oamc
