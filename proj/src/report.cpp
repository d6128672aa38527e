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
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "oamc/analysis.hpp"

namespace oamc {

using json = nlohmann::json;

std::string to_json(const ResourceReport &r) {
    json j;
    j["beam_splitters"] = r.beam_splitters;
    j["phase_shifters"] = r.phase_shifters;
    j["dove_prisms"] = r.dove_prisms;
    j["holograms"] = r.holograms;
    j["mirrors"] = r.mirrors;
    j["pbs"] = r.pbs;
    j["hwp"] = r.hwp;
    j["permutations"] = r.permutations;
    j["ideal_swaps"] = r.ideal_swaps;
    j["formula_beam_splitters"] = r.formula_beam_splitters;
    j["formula_derived"] = r.formula_derived;
    return j.dump(2) + "\n";
}

std::string to_json(const LossReport &r) {
    json j;
    j["scheme"] = to_string(r.scheme);
    j["T"] = r.T;
    j["d"] = r.d;
    j["n"] = r.n;
    j["per_photon_depths"] = r.per_photon_depths;
    j["total_exponent"] = r.total_exponent;
    j["all_photon_transmittance"] = r.all_photon_transmittance;
    j["per_photon_transmittance"] = r.per_photon_transmittance;
    j["per_photon_penalty_factor"] = r.per_photon_penalty_factor;
    return j.dump(2) + "\n";
}

std::string to_json(const PeriodicityReport &r) {
    json j;
    j["d"] = r.d;
    j["a_lo"] = r.a_lo;
    j["a_hi"] = r.a_hi;
    j["subspaces"] = r.subspaces;
    j["distances"] = r.distances;
    j["max_distance"] = r.max_distance;
    j["max_unitarity_defect"] = r.max_unitarity_defect;
    return j.dump(2) + "\n";
}

std::string to_json(const std::vector<Fig6Cell> &cells) {
    json arr = json::array();
    for (const auto &c : cells) {
        json j;
        j["n"] = c.n;
        j["d"] = c.d;
        j["k"] = c.k;
        j["k_eff"] = c.k_eff;
        if (c.error.empty()) {
            j["naive"] = c.naive;
            j["parallelized"] = c.parallelized;
        } else {
            j["error"] = c.error;
        }
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string format_table(const std::vector<std::vector<std::string>> &rows) {
    std::vector<std::size_t> width;
    for (const auto &row : rows) {
        if (row.size() > width.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    for (const auto &row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out << "  ";
            out << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        out << '\n';
    }
    return out.str();
}

std::string format_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

}  // namespace oamc
