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
#include <stdexcept>

#include "oamc/analysis.hpp"
#include "oamc/intmath.hpp"

namespace oamc {

std::string to_string(LossScheme s) {
    switch (s) {
    case LossScheme::universal: return "universal";
    case LossScheme::naive_parallel: return "naive_parallel";
    case LossScheme::parallelized: return "parallelized";
    }
    return "?";
}

LossScheme loss_scheme_from_string(const std::string &s) {
    for (LossScheme x : {LossScheme::universal, LossScheme::naive_parallel, LossScheme::parallelized}) {
        if (to_string(x) == s) return x;
    }
    throw std::invalid_argument("unknown loss scheme \"" + s + "\"");
}

LossReport loss_model(std::int64_t d, std::int64_t n, double T, LossScheme scheme) {
    require_pow2(d, "d", "loss_model");
    if (!(T > 0 && T <= 1)) {
        throw RegimeError("loss_model: T must lie in (0, 1]");
    }
    if (scheme != LossScheme::universal && n != d) {
        throw RegimeError("loss_model: parallel comparisons assume n = d");
    }
    const std::int64_t ld = log2_exact(d);
    LossReport r;
    r.scheme = scheme;
    r.T = T;
    r.d = d;
    r.n = scheme == LossScheme::universal ? 1 : n;
    const std::int64_t per_port = d + 10 * ld;
    switch (scheme) {
    case LossScheme::universal:
        r.per_photon_depths = {static_cast<double>(per_port)};
        r.total_exponent = per_port;
        break;
    case LossScheme::naive_parallel:
        r.per_photon_depths.assign(static_cast<std::size_t>(d), static_cast<double>(per_port));
        r.total_exponent = d * d + 10 * d * ld;
        break;
    case LossScheme::parallelized:
        // Only the sum over ports is fixed; each port gets the mean.
        r.per_photon_depths.assign(static_cast<std::size_t>(d), static_cast<double>(d + 12 * ld));
        r.total_exponent = d * d + 12 * d * ld;
        break;
    }
    const double photons = static_cast<double>(r.per_photon_depths.size());
    r.all_photon_transmittance = std::pow(T, static_cast<double>(r.total_exponent));
    r.per_photon_transmittance = std::pow(T, static_cast<double>(r.total_exponent) / photons);
    r.per_photon_penalty_factor = std::pow(T, static_cast<double>(2 * ld));
    return r;
}

double measured_depth(const Netlist &nl, const Mode &input) {
    ModeWindow in(input.oam, input.oam, std::max(nl.window_hint.n_paths, input.path + 1), input.pol.has_value());
    const ModeWindow w = required_window(nl, in);
    StateVector psi = basis_state(w, input);
    double depth = 0;
    for (const auto &e : nl.elements) {
        if (!std::holds_alternative<PhaseShifter>(e) && !acts_on_all_paths(e)) {
            const auto paths = paths_of(e);
            for (const auto &[mode, amp] : psi.amplitudes()) {
                if (std::find(paths.begin(), paths.end(), mode.path) != paths.end()) {
                    depth += std::norm(amp);
                }
            }
        }
        psi = apply_element(e, psi);
        psi.prune();
    }
    return depth;
}

}  // namespace oamc
