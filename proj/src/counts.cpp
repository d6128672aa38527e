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

#include <type_traits>

#include "oamc/analysis.hpp"

namespace oamc {

ResourceReport count_netlist(const Netlist &nl) {
    ResourceReport r;
    for (const auto &e : nl.elements) {
        std::visit(
            [&](const auto &x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, BeamSplitter>) {
                    ++r.beam_splitters;
                } else if constexpr (std::is_same_v<T, PhaseShifter>) {
                    ++r.phase_shifters;
                } else if constexpr (std::is_same_v<T, DovePrism>) {
                    ++r.dove_prisms;
                } else if constexpr (std::is_same_v<T, Hologram>) {
                    ++r.holograms;
                } else if constexpr (std::is_same_v<T, Mirror>) {
                    ++r.mirrors;
                } else if constexpr (std::is_same_v<T, PathPermutation>) {
                    ++r.permutations;
                } else if constexpr (std::is_same_v<T, IdealSwap>) {
                    ++r.ideal_swaps;
                    const std::int64_t bs = formula_counts(Formula::swap, {x.n_in, x.d_out, 0});
                    r.formula_beam_splitters += bs;
                    r.beam_splitters += bs;
                    r.formula_derived = true;
                } else if constexpr (std::is_same_v<T, PolSplitter>) {
                    ++r.pbs;
                } else if constexpr (std::is_same_v<T, HalfWavePlate>) {
                    ++r.hwp;
                }
            },
            e);
    }
    return r;
}

}  // namespace oamc
