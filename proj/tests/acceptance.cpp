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

// Standalone acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "oamc/analysis.hpp"
#include "oamc/blocks.hpp"
#include "oamc/synth.hpp"
#include "support.hpp"

using namespace oamc;
using test::fdiv;
using test::fmod_pos;
using test::Gen;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

// Distance of an output state from e^{i theta}|expect>, minimized over theta.
double basis_distance(const StateVector &out, const Mode &expect) {
    double d = std::abs(1.0 - std::abs(out.amplitude(expect)));
    for (const auto &[m, a] : out.amplitudes()) {
        if (!(m == expect)) d = std::max(d, std::abs(a));
    }
    return d;
}

CMatrix oam_block(const Netlist &nl, int d) {
    const auto in = oam_ladder(0, d, 0);
    return subspace_transfer(nl, in, in);
}

void criterion1(Outcome &o) {
    double worst = 0;
    for (int d : {2, 4, 8, 16}) {
        const Netlist s = sorter(d);
        for (std::int64_t m = -2 * d; m <= 4 * d - 1; ++m) {
            const Mode expect{d * fdiv(m, d), static_cast<int>(fmod_pos(m, d)), {}};
            const double dist = basis_distance(test::propagate(s, Mode{m, 0, {}}), expect);
            worst = std::max(worst, dist);
            o.require(dist <= 1e-9, "sorter d=" + std::to_string(d) + " m=" + std::to_string(m));
        }
    }
    o.detail << "max distance " << worst;
}

void criterion2(Outcome &o) {
    Gen g(2002);
    double worst = 0;
    for (int d : {2, 4, 8}) {
        for (int i = 0; i < 20; ++i) {
            const CMatrix u = g.unitary(d);
            const double dist = phase_aligned_distance(oam_block(universal_oam(u, d), d), u);
            worst = std::max(worst, dist);
            o.require(dist <= 1e-8, "universal d=" + std::to_string(d));
        }
    }
    o.detail << "60 unitaries, max distance " << worst;
}

void criterion3(Outcome &o) {
    int cells = 0;
    for (int d : {4, 8, 16}) {
        for (int k = 1; 2 * k <= d; ++k) {
            const std::int64_t got = count_netlist(xk_gate(d, k)).beam_splitters;
            o.require(got == formula_counts(Formula::xk, {0, d, k}),
                      "N_X(" + std::to_string(d) + "," + std::to_string(k) + ")");
            ++cells;
        }
    }
    const std::int64_t spot[4] = {12, 20, 24, 28};
    for (int k = 1; k <= 4; ++k) {
        o.require(count_netlist(xk_gate(8, k)).beam_splitters == spot[k - 1], "spot N(8," + std::to_string(k) + ")");
        o.require(formula_counts(Formula::xk, {0, 8, k}) == spot[k - 1], "formula N(8," + std::to_string(k) + ")");
    }
    o.detail << cells << " (d,k) pairs, N(8,1..4) = 12/20/24/28";
}

void criterion4(Outcome &o) {
    // Independent evaluation of both closed forms.
    auto lg = [](std::int64_t x) {
        std::int64_t r = 0;
        while ((std::int64_t{1} << r) < x) ++r;
        return r;
    };
    auto nx = [&](std::int64_t d, std::int64_t k) {
        std::int64_t m = 0;
        while ((std::int64_t{2} << m) <= k) ++m;
        return 4 * (k * (lg(d) - m - 1) + (std::int64_t{2} << m) - 1);
    };
    auto nxpar = [&](std::int64_t n, std::int64_t d, std::int64_t k) {
        std::int64_t m = 0;
        while ((std::int64_t{2} << m) <= k) ++m;
        return n * lg(n) + 2 * n - 4 * k + 2 + 2 * d * k / (std::int64_t{1} << m) + 2 * d * (m - 1);
    };
    const auto cells = fig6_table(16);
    o.require(cells.size() == 26, "grid shape");
    for (const auto &c : cells) {
        const std::int64_t k = std::min(c.k, c.d - c.k);
        o.require(c.error.empty(), "cell error");
        o.require(c.naive == 16 * nx(c.d, k), "naive cell");
        o.require(c.parallelized == nxpar(16, c.d, k), "parallelized cell");
        if (c.d == 16 && c.k == 8) {
            o.require(c.naive == 960 && c.parallelized == 162, "(16,8) = 960 / 162");
            o.detail << "(d=16,k=8): naive " << c.naive << ", parallelized " << c.parallelized;
        }
    }
}

void criterion5(Outcome &o) {
    double worst = 0;
    for (int d : {2, 4, 8, 16}) {
        for (int k = 1; k < d; ++k) {
            const double a = phase_aligned_distance(oam_block(xk_gate(d, k), d), test::shift_oracle(d, k));
            const double b =
                phase_aligned_distance(oam_block(concat(xk_gate(d, k), xk_gate(d, d - k)), d), CMatrix::Identity(d, d));
            worst = std::max({worst, a, b});
            o.require(a <= 1e-9 && b <= 1e-9, "X^k d=" + std::to_string(d) + " k=" + std::to_string(k));
        }
    }
    o.detail << "max distance " << worst;
}

void criterion6(Outcome &o) {
    Gen g(2006);
    double worst = 0;
    for (int n : {2, 4, 8}) {
        for (int d : {2, 4, 8}) {
            const std::vector<std::pair<std::string, CMatrix>> us{
                {"Z", pauli_z(n)}, {"X", test::shift_oracle(n, 1)}, {"random", g.unitary(n)}};
            for (const auto &[name, u] : us) {
                std::vector<Mode> in;
                CMatrix t = CMatrix::Zero(n * d, n * d);
                for (int q = 0; q < d; ++q) {
                    for (int p = 0; p < n; ++p) in.push_back(Mode{q, p, {}});
                    t.block(q * n, q * n, n, n) = test::power_oracle(u, q);
                }
                const double dist = phase_aligned_distance(subspace_transfer(controlled_u(u, d), in, in), t);
                worst = std::max(worst, dist);
                o.require(dist <= 1e-8, "controlled " + name + " n=" + std::to_string(n) + " d=" + std::to_string(d));
            }
            const ResourceReport cz = count_netlist(cz_gate(n, d));
            o.require(cz.dove_prisms == n && cz.beam_splitters == 0, "CZ element counts");
        }
    }
    o.detail << "max distance " << worst << "; CZ: n Dove prisms, 0 beam splitters";
}

void criterion7(Outcome &o) {
    Gen g(2007);
    double worst = 0;
    for (int n : {2, 4, 8}) {
        const int d = n;
        const CMatrix u = g.unitary(d);
        std::vector<Mode> in;
        CMatrix target = CMatrix::Zero(n * d, n * d);
        // Naive stack: one universal scheme per path.
        CMatrix naive = CMatrix::Zero(n * d, n * d);
        const CMatrix single = oam_block(universal_oam(u, d), d);
        for (int p = 0; p < n; ++p) {
            for (int q = 0; q < d; ++q) in.push_back(Mode{q, p, {}});
            target.block(p * d, p * d, d, d) = u;
            naive.block(p * d, p * d, d, d) = single;
        }
        for (SwapMode mode : {SwapMode::ideal, SwapMode::expanded}) {
            const CMatrix got = subspace_transfer(parallelize(u, n, mode), in, in);
            const double a = phase_aligned_distance(got, target);
            const double b = phase_aligned_distance(got, naive);
            worst = std::max({worst, a, b});
            o.require(a <= 1e-8 && b <= 1e-8, "parallelized n=d=" + std::to_string(n) + " " + to_string(mode));
        }
    }
    o.detail << "ideal and expanded swaps, max distance " << worst;
}

void criterion8(Outcome &o) {
    Gen g(2008);
    struct Case {
        std::string name;
        Netlist nl;
        int d;
        std::vector<int> paths;
    };
    std::vector<Case> cases;
    for (int d : {2, 4, 8}) {
        for (int k = 1; k < d; ++k) cases.push_back({"xk", xk_gate(d, k), d, {0}});
        cases.push_back({"z", z_gate(d, 1), d, {0}});
        cases.push_back({"universal", universal_oam(g.unitary(d), d), d, {0}});
        cases.push_back({"cz", cz_gate(d, d), d, {0, 1}});
    }
    for (int n : {2, 4}) {
        for (SwapMode mode : {SwapMode::ideal, SwapMode::expanded}) {
            std::vector<int> paths(static_cast<std::size_t>(n));
            for (int p = 0; p < n; ++p) paths[static_cast<std::size_t>(p)] = p;
            cases.push_back({"parallelized", parallelize(g.unitary(n), n, mode), n, paths});
            cases.push_back({"path_controlled", path_controlled(test::shift_oracle(n, 1), n, mode), n, paths});
        }
    }
    double worst = 0;
    for (const auto &c : cases) {
        const PeriodicityReport r = check_periodicity(c.nl, c.d, -2, 2, c.paths);
        worst = std::max(worst, r.max_distance);
        o.require(r.max_distance <= 1e-9 && r.max_unitarity_defect <= 1e-9, c.name + " d=" + std::to_string(c.d));
    }
    const PeriodBound b = controlled_period_bound(std::vector<Rational>{{1, 2}, {1, 3}});
    o.require(b.product == 6 && b.certified == 6, "period bound {1/2,1/3}");
    o.detail << cases.size() << " gates over a in [-2,2], max distance " << worst << "; period bound "
             << b.product;
}

void criterion9(Outcome &o) {
    const LossReport r = loss_model(16, 16, 0.9, LossScheme::parallelized);
    o.require(std::abs(r.per_photon_penalty_factor - 0.43046721) <= 1e-10, "penalty 0.9^8");
    o.require(r.per_photon_penalty_factor >= 0.43, "penalty >= 0.43");
    for (std::int64_t d : {4, 8, 16}) {
        std::int64_t l = 0;
        while ((std::int64_t{1} << l) < d) ++l;
        o.require(loss_model(d, d, 0.9, LossScheme::naive_parallel).total_exponent == d * d + 10 * d * l,
                  "naive exponent d=" + std::to_string(d));
        o.require(loss_model(d, d, 0.9, LossScheme::parallelized).total_exponent == d * d + 12 * d * l,
                  "parallelized exponent d=" + std::to_string(d));
    }
    o.detail << "penalty " << r.per_photon_penalty_factor;
}

void criterion10(Outcome &o) {
    Gen g(2010);
    double worst = 0;
    std::size_t before = 0;
    std::size_t after = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = g.integer(2, 5);
        const Netlist nl = test::random_composition(g, n);
        const Netlist s = simplify(nl);
        const auto [t0, t1] = test::joint_transfer(nl, s, ModeWindow(-3, 3, n));
        const double dist = phase_aligned_distance(t0, t1);
        worst = std::max(worst, dist);
        o.require(dist <= 1e-10, "soundness trial " + std::to_string(trial));
        o.require(simplify(s) == s, "idempotence trial " + std::to_string(trial));
        before += nl.elements.size();
        after += s.elements.size();
    }
    o.detail << "100 compositions, max distance " << worst << ", elements " << before << " -> " << after;
}

void criterion11(Outcome &o) {
    o.require(test::maps_to(swap_ideal(4, 4), Mode{3, 1, {}}, Mode{1, 3, {}}), "n=d=4 example");
    o.require(test::maps_to(swap_ideal(8, 4), Mode{6, 5, {}}, Mode{5, 3, {}}), "n=8,d=4 example");
    o.require(test::maps_to(swap_ideal(2, 4), Mode{5, 1, {}}, Mode{6, 1, {}}), "n=2,d=4 example");
    int inputs = 0;
    for (int n : {1, 2, 4, 8}) {
        for (int d : {1, 2, 4, 8}) {
            const Netlist ideal = swap_ideal(n, d);
            const Netlist ex = swap_expanded(n, d);
            const std::int64_t c = n > d ? n / d : 1;
            for (int p = 0; p < n; ++p) {
                for (std::int64_t m = 0; m < d; ++m) {
                    const Mode in{c * m, p, {}};
                    const Mode want = ideal_swap_action(IdealSwap{n, d, false}, in);
                    const StateVector a = test::propagate(ideal, in);
                    const StateVector b = test::propagate(ex, in);
                    o.require(std::abs(a.amplitude(want) - b.amplitude(want)) <= 1e-9 &&
                                  basis_distance(b, want) <= 1e-9,
                              "expanded n=" + std::to_string(n) + " d=" + std::to_string(d));
                    ++inputs;
                }
            }
        }
    }
    o.detail << "3 worked examples, " << inputs << " valid inputs compared";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome &)>>> criteria{
        {"sorter modulo property", criterion1},
        {"universal scheme on Haar unitaries", criterion2},
        {"X^k beam-splitter counts", criterion3},
        {"naive vs parallelized X^k table", criterion4},
        {"X^k semantics and inverse law", criterion5},
        {"controlled gates", criterion6},
        {"parallelization", criterion7},
        {"periodicity", criterion8},
        {"loss model", criterion9},
        {"simplify soundness", criterion10},
        {"swap semantics", criterion11},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << o.detail.str() << "; " << secs << " s)" << std::endl;
        failures += o.pass ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
