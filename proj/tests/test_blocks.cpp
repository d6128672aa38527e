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

#include <doctest.h>

#include "oamc/analysis.hpp"
#include "oamc/blocks.hpp"
#include "oamc/intmath.hpp"
#include "support.hpp"

using namespace oamc;
using test::fdiv;
using test::fmod_pos;

namespace {
const double kPi = std::numbers::pi;

// Amplitude of the single expected output, or 0 if the state spreads.
Complex routed(const Netlist &nl, const Mode &in, const Mode &out) { return test::propagate(nl, in).amplitude(out); }

// The exchanger law on plain integers.
std::pair<std::int64_t, int> contract(std::int64_t k, std::int64_t m, int p) {
    const std::int64_t t = fmod_pos(fdiv(m, k), 2);
    return {m - t * k + p * k, static_cast<int>(t)};
}
}  // namespace

TEST_CASE("leach interferometer sorts parity") {
    const Netlist l = leach(0, kPi / 2);
    for (std::int64_t m = -4; m <= 4; ++m) {
        const int port = fmod_pos(m, 2) == 0 ? 1 : 0;
        CHECK(std::abs(routed(l, Mode{m, 0, {}}, Mode{m, port, {}})) == doctest::Approx(1).epsilon(1e-12));
    }
    const Netlist flat = leach(0.7, 0);
    const std::vector<Mode> a{{0, 0, {}}, {0, 1, {}}};
    const std::vector<Mode> b{{3, 0, {}}, {3, 1, {}}};
    CHECK(max_abs_diff(subspace_transfer(flat, a, a), subspace_transfer(flat, b, b)) < 1e-12);
    const ModeWindow sym(-3, 3, 2);
    CHECK(is_unitary(transfer_matrix(l, sym), 1e-12));
}

TEST_CASE("exchanger examples") {
    CHECK(std::abs(routed(exchanger(1), Mode{5, 0, {}}, Mode{4, 1, {}}) - 1.0) < 1e-12);
    CHECK(std::abs(routed(exchanger(2), Mode{6, 0, {}}, Mode{4, 1, {}}) - 1.0) < 1e-12);
}

TEST_CASE("exchanger contract holds with unit phase on multiples of k") {
    for (std::int64_t k : {1, 2, 4, 8}) {
        const Netlist e = exchanger(k);
        for (std::int64_t j = -6; j <= 6; ++j) {
            for (int p = 0; p < 2; ++p) {
                const auto [m_out, t] = contract(k, j * k, p);
                const Complex a = routed(e, Mode{j * k, p, {}}, Mode{m_out, t, {}});
                CHECK_MESSAGE(std::abs(a - 1.0) < 1e-12, "k=" << k << " m=" << j * k << " p=" << p);
            }
        }
    }
}

TEST_CASE("exchanger followed by its inverse is the identity") {
    for (std::int64_t k : {1, 2, 4}) {
        const Netlist both = concat(exchanger(k), exchanger_inv(k));
        const ModeWindow in(-3 * k, 3 * k, 2);
        const auto modes = in.modes();
        const CMatrix t = subspace_transfer(both, modes, modes);
        CHECK(max_abs_diff(t, CMatrix::Identity(t.rows(), t.cols())) < 1e-10);
    }
    CHECK_THROWS_AS(exchanger(3), RegimeError);
    CHECK_THROWS_AS(exchanger(0), RegimeError);
}

TEST_CASE("stored calibration matches a fresh numerical calibration") {
    for (int k : {1, 2}) {
        const ExchangerCalibration c = calibrate_exchanger(k);
        CHECK(std::abs(std::remainder(c.leach_phase - kExchangerCalibration.leach_phase, 2 * kPi)) < 1e-6);
        CHECK(std::abs(std::remainder(c.input_phase - kExchangerCalibration.input_phase, 2 * kPi)) < 1e-6);
        CHECK(std::abs(std::remainder(c.output_phase - kExchangerCalibration.output_phase, 2 * kPi)) < 1e-6);
    }
}

TEST_CASE("exchanger contract implies the sorter property") {
    // Binary tree on plain integers, no optics involved.
    for (int d : {2, 4, 8, 16, 32}) {
        for (std::int64_t m = 0; m < 4 * d; ++m) {
            std::int64_t oam = m;
            int path = 0;
            for (int half = 1; half < d; half *= 2) {
                if (path < half) {
                    const auto [o, t] = contract(half, oam, 0);
                    oam = o;
                    path = path + t * half;
                } else {
                    const auto [o, t] = contract(half, oam, 1);
                    oam = o;
                    path = path - half + t * half;
                }
            }
            CHECK(oam == d * fdiv(m, d));
            CHECK(path == fmod_pos(m, d));
        }
    }
}

TEST_CASE("sorter examples and counts") {
    CHECK(std::abs(routed(sorter(8), Mode{5, 0, {}}, Mode{0, 5, {}}) - 1.0) < 1e-12);
    CHECK(std::abs(routed(sorter(4), Mode{6, 0, {}}, Mode{4, 2, {}}) - 1.0) < 1e-12);
    for (int d : {2, 4, 8, 16}) {
        const ResourceReport r = count_netlist(sorter(d));
        CHECK(r.beam_splitters == 2 * (d - 1));
        CHECK(r.dove_prisms == d - 1);
        CHECK(r.holograms == 2 * (d - 1));
        CHECK(r.mirrors == d - 1);
    }
    CHECK_THROWS_AS(sorter(6), RegimeError);
}

TEST_CASE("sorter property for negative and large OAM") {
    for (int d : {2, 4, 8}) {
        const Netlist s = sorter(d);
        for (std::int64_t m = -2 * d; m < 4 * d; ++m) {
            const Mode out{d * fdiv(m, d), static_cast<int>(fmod_pos(m, d)), {}};
            CHECK_MESSAGE(std::abs(routed(s, Mode{m, 0, {}}, out) - 1.0) < 1e-10, "d=" << d << " m=" << m);
        }
    }
}

TEST_CASE("sorter_inv undoes sorter") {
    for (int d : {2, 4, 8}) {
        const Netlist both = concat(sorter(d), sorter_inv(d));
        std::vector<Mode> modes = oam_ladder(-2 * d, 4 * d + 1, 0);
        const CMatrix t = subspace_transfer(both, modes, modes);
        CHECK(max_abs_diff(t, CMatrix::Identity(t.rows(), t.cols())) < 1e-10);
    }
}

TEST_CASE("ideal swap examples") {
    CHECK(test::maps_to(swap_ideal(4, 4), Mode{3, 1, {}}, Mode{1, 3, {}}));
    CHECK(test::maps_to(swap_ideal(8, 4), Mode{6, 5, {}}, Mode{5, 3, {}}));
    CHECK(test::maps_to(swap_ideal(2, 4), Mode{5, 1, {}}, Mode{6, 1, {}}));
    for (int n : {2, 4, 8}) {
        const Netlist twice = concat(swap_ideal(n, n), swap_ideal(n, n));
        for (int m = 0; m < n; ++m) {
            for (int p = 0; p < n; ++p) CHECK(test::maps_to(twice, Mode{m, p, {}}, Mode{m, p, {}}));
        }
    }
    CHECK_THROWS_AS(swap_ideal(3, 4), RegimeError);
    CHECK_THROWS_AS(test::propagate(swap_ideal(8, 4), Mode{3, 0, {}}), SimulationError);
}

TEST_CASE("expanded swap matches the ideal swap") {
    for (int n : {1, 2, 4, 8}) {
        for (int d : {1, 2, 4, 8}) {
            if (n * d > 32) continue;
            const Netlist ex = swap_expanded(n, d);
            const IdealSwap s{n, d, false};
            const std::int64_t c = n > d ? n / d : 1;
            for (int p = 0; p < n; ++p) {
                for (std::int64_t m = 0; m < d; ++m) {
                    const Mode in{c * m, p, {}};
                    const Mode want = ideal_swap_action(s, in);
                    CHECK_MESSAGE(std::abs(routed(ex, in, want) - 1.0) < 1e-10,
                                  "n=" << n << " d=" << d << " in=" << to_string(in));
                }
            }
        }
    }
}

TEST_CASE("expanded swap preserves norm on its valid subspace") {
    const Netlist ex = swap_expanded(4, 4);
    for (int p = 0; p < 4; ++p) {
        for (std::int64_t m = -4; m < 8; ++m) {
            CHECK(test::propagate(ex, Mode{m, p, {}}).norm() == doctest::Approx(1).epsilon(1e-12));
        }
    }
}

TEST_CASE("build dispatches block kinds") {
    CHECK(build(BlockSpec{BlockKind::exchanger, 2, 0, 0, 0, 0}) == exchanger(2));
    CHECK(build(BlockSpec{BlockKind::sorter, 1, 8, 0, 0, 0}) == sorter(8));
    CHECK(build(BlockSpec{BlockKind::swap_ideal, 1, 4, 2, 0, 0}) == swap_ideal(4, 2));
    CHECK(build(BlockSpec{BlockKind::leach, 1, 0, 0, 0.5, 0.25}) == leach(0.5, 0.25));
}
