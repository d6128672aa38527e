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

#include "oamc/blocks.hpp"
#include "oamc/modes.hpp"
#include "support.hpp"

using namespace oamc;

TEST_CASE("basis_state inside and outside the window") {
    const ModeWindow w(-8, 8, 4);
    const StateVector s = basis_state(w, Mode{3, 0, {}});
    CHECK(s.amplitude(Mode{3, 0, {}}) == Complex(1, 0));
    CHECK(s.norm() == doctest::Approx(1));
    CHECK_THROWS_AS(basis_state(w, Mode{9, 0, {}}), WindowError);
    CHECK_THROWS_AS(basis_state(w, Mode{0, 4, {}}), WindowError);

    const ModeWindow wp(0, 0, 1, true);
    const StateVector h = basis_state(wp, Mode{0, 0, Pol::H});
    CHECK(h.amplitude(Mode{0, 0, Pol::H}) == Complex(1, 0));
    CHECK(h.amplitude(Mode{0, 0, Pol::V}) == Complex(0, 0));
}

TEST_CASE("inner products") {
    const ModeWindow w(0, 3, 1);
    StateVector plus(w);
    plus.add(Mode{0, 0, {}}, 1 / std::sqrt(2.0));
    plus.add(Mode{1, 0, {}}, 1 / std::sqrt(2.0));
    CHECK(std::abs(inner(plus, plus) - 1.0) < 1e-15);
    CHECK(std::abs(inner(basis_state(w, Mode{0, 0, {}}), basis_state(w, Mode{1, 0, {}}))) == 0);
    CHECK(std::abs(inner(plus, basis_state(w, Mode{1, 0, {}})) - 1 / std::sqrt(2.0)) < 1e-15);
    CHECK_THROWS(inner(plus, basis_state(ModeWindow(0, 4, 1), Mode{0, 0, {}})));
}

TEST_CASE("window enumeration is a stable bijection") {
    for (const ModeWindow w : {ModeWindow(-3, 2, 3), ModeWindow(0, 4, 2, true), ModeWindow(5, 5, 1)}) {
        const auto modes = w.modes();
        REQUIRE(modes.size() == w.size());
        for (std::size_t i = 0; i < modes.size(); ++i) {
            CHECK(w.index_of(modes[i]) == i);
            CHECK(w.mode_at(i) == modes[i]);
            if (i > 0) CHECK(modes[i - 1] < modes[i]);
        }
    }
}

TEST_CASE("window validation") {
    CHECK_THROWS(ModeWindow(3, 2, 1));
    CHECK_THROWS(ModeWindow(0, 2, 0));
}

TEST_CASE("required_window interval analysis") {
    Netlist holo{"h", ModeWindow(0, 7, 1), {Hologram{0, 2}}, {}};
    const ModeWindow a = required_window(holo, ModeWindow(0, 7, 1));
    CHECK(a.oam_lo <= 0);
    CHECK(a.oam_hi >= 9);

    Netlist mirror{"m", ModeWindow(0, 7, 1), {Mirror{0}}, {}};
    const ModeWindow b = required_window(mirror, ModeWindow(0, 7, 1));
    CHECK(b.oam_lo <= -7);
    CHECK(b.oam_hi >= 7);
}

TEST_CASE("sorter simulated in its required window loses nothing") {
    const Netlist s = sorter(8);
    const ModeWindow in(0, 7, 8);
    const ModeWindow w = required_window(s, in);
    for (std::int64_t m = 0; m < 8; ++m) {
        const StateVector out = apply_netlist(s, basis_state(w, Mode{m, 0, {}}));
        CHECK(out.norm() == doctest::Approx(1).epsilon(1e-12));
    }
}
