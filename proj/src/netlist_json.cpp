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

#include <limits>

#include <json.hpp>

#include "oamc/elements.hpp"

namespace oamc {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

constexpr const char *kSchemaVersion = "1";

json element_to_json(const Element &e) {
    json j;
    j["type"] = tag(e);
    std::visit(overloaded{
                   [&](const BeamSplitter &x) {
                       j["paths"] = {x.path_a, x.path_b};
                       j["theta"] = x.theta;
                       j["phi"] = x.phi;
                   },
                   [&](const PhaseShifter &x) {
                       j["path"] = x.path;
                       j["phi"] = x.phi;
                   },
                   [&](const DovePrism &x) {
                       j["path"] = x.path;
                       j["alpha"] = x.alpha;
                   },
                   [&](const Hologram &x) {
                       j["path"] = x.path;
                       j["charge"] = x.charge;
                   },
                   [&](const Mirror &x) { j["path"] = x.path; },
                   [&](const PathPermutation &x) { j["map"] = x.map; },
                   [&](const IdealSwap &x) {
                       j["n"] = x.n_in;
                       j["d"] = x.d_out;
                       if (x.inverse) {
                           j["inverse"] = true;
                       }
                   },
                   [&](const PolSplitter &x) { j["paths"] = {x.path_a, x.path_b}; },
                   [&](const HalfWavePlate &x) { j["path"] = x.path; },
               },
               e);
    return j;
}

// Field accessors that report the JSON path of the offending field.
const json &field(const json &obj, const std::string &key, const std::string &where) {
    if (!obj.is_object()) {
        throw SchemaError(where, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw SchemaError(where + "." + key, "missing field");
    }
    return *it;
}

std::int64_t get_int(const json &obj, const std::string &key, const std::string &where) {
    const json &v = field(obj, key, where);
    if (!v.is_number_integer()) {
        throw SchemaError(where + "." + key, "expected an integer");
    }
    return v.get<std::int64_t>();
}

int get_small_int(const json &obj, const std::string &key, const std::string &where) {
    std::int64_t v = get_int(obj, key, where);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        throw SchemaError(where + "." + key, "integer out of range");
    }
    return static_cast<int>(v);
}

double get_real(const json &obj, const std::string &key, const std::string &where) {
    const json &v = field(obj, key, where);
    if (!v.is_number()) {
        throw SchemaError(where + "." + key, "expected a number");
    }
    return v.get<double>();
}

std::pair<int, int> get_pair(const json &obj, const std::string &where) {
    const json &v = field(obj, "paths", where);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
        throw SchemaError(where + ".paths", "expected two integer path indices");
    }
    return {v[0].get<int>(), v[1].get<int>()};
}

Element element_from_json(const json &j, const std::string &where) {
    const json &type = field(j, "type", where);
    if (!type.is_string()) {
        throw SchemaError(where + ".type", "expected a string");
    }
    const std::string t = type.get<std::string>();
    if (t == "bs") {
        auto [a, b] = get_pair(j, where);
        return BeamSplitter{a, b, get_real(j, "theta", where), get_real(j, "phi", where)};
    }
    if (t == "phase") {
        return PhaseShifter{get_small_int(j, "path", where), get_real(j, "phi", where)};
    }
    if (t == "dove") {
        return DovePrism{get_small_int(j, "path", where), get_real(j, "alpha", where)};
    }
    if (t == "holo") {
        return Hologram{get_small_int(j, "path", where), get_int(j, "charge", where)};
    }
    if (t == "mirror") {
        return Mirror{get_small_int(j, "path", where)};
    }
    if (t == "perm") {
        const json &m = field(j, "map", where);
        if (!m.is_array()) {
            throw SchemaError(where + ".map", "expected an array");
        }
        PathPermutation p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i].is_number_integer()) {
                throw SchemaError(where + ".map[" + std::to_string(i) + "]", "expected an integer");
            }
            p.map.push_back(m[i].get<int>());
        }
        return p;
    }
    if (t == "ideal_swap") {
        IdealSwap s{get_small_int(j, "n", where), get_small_int(j, "d", where), false};
        if (auto it = j.find("inverse"); it != j.end()) {
            if (!it->is_boolean()) {
                throw SchemaError(where + ".inverse", "expected a boolean");
            }
            s.inverse = it->get<bool>();
        }
        return s;
    }
    if (t == "pbs") {
        auto [a, b] = get_pair(j, where);
        return PolSplitter{a, b};
    }
    if (t == "hwp") {
        return HalfWavePlate{get_small_int(j, "path", where)};
    }
    throw SchemaError(where + ".type", "unknown element tag \"" + t + "\"");
}

}  // namespace

SchemaError::SchemaError(const std::string &where, const std::string &what)
    : std::invalid_argument(where + ": " + what), where_(where) {}

std::string serialize(const Netlist &nl) {
    json doc;
    doc["version"] = kSchemaVersion;
    doc["name"] = nl.name;
    doc["window"] = {{"oam_lo", nl.window_hint.oam_lo},
                     {"oam_hi", nl.window_hint.oam_hi},
                     {"n_paths", nl.window_hint.n_paths},
                     {"pol", nl.window_hint.with_pol}};
    doc["annotations"] = json::object();
    for (const auto &[k, v] : nl.annotations) {
        doc["annotations"][k] = v;
    }
    doc["elements"] = json::array();
    for (const auto &e : nl.elements) {
        doc["elements"].push_back(element_to_json(e));
    }
    return doc.dump(2) + "\n";
}

Netlist deserialize(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &err) {
        throw SchemaError("$", std::string("malformed JSON: ") + err.what());
    }
    const std::string root = "$";
    const json &version = field(doc, "version", root);
    if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
        throw SchemaError("$.version", "unsupported schema version (expected \"1\")");
    }
    Netlist nl;
    const json &name = field(doc, "name", root);
    if (!name.is_string()) {
        throw SchemaError("$.name", "expected a string");
    }
    nl.name = name.get<std::string>();

    const json &w = field(doc, "window", root);
    const json &pol = field(w, "pol", "$.window");
    if (!pol.is_boolean()) {
        throw SchemaError("$.window.pol", "expected a boolean");
    }
    try {
        nl.window_hint = ModeWindow(get_int(w, "oam_lo", "$.window"), get_int(w, "oam_hi", "$.window"),
                                    get_small_int(w, "n_paths", "$.window"), pol.get<bool>());
    } catch (const SchemaError &) {
        throw;
    } catch (const std::invalid_argument &err) {
        throw SchemaError("$.window", err.what());
    }

    if (auto it = doc.find("annotations"); it != doc.end()) {
        if (!it->is_object()) {
            throw SchemaError("$.annotations", "expected an object");
        }
        for (const auto &[k, v] : it->items()) {
            if (!v.is_string()) {
                throw SchemaError("$.annotations." + k, "expected a string");
            }
            nl.annotations[k] = v.get<std::string>();
        }
    }

    const json &elems = field(doc, "elements", root);
    if (!elems.is_array()) {
        throw SchemaError("$.elements", "expected an array");
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const std::string where = "$.elements[" + std::to_string(i) + "]";
        Element e = element_from_json(elems[i], where);
        try {
            validate(e, nl.window_hint.n_paths);
        } catch (const std::invalid_argument &err) {
            throw SchemaError(where, err.what());
        }
        nl.elements.push_back(std::move(e));
    }
    return nl;
}

std::string matrix_to_json(const CMatrix &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(row);
    }
    return rows.dump();
}

CMatrix matrix_from_json(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &err) {
        throw SchemaError("$", std::string("malformed JSON: ") + err.what());
    }
    if (!doc.is_array() || doc.empty()) {
        throw SchemaError("$", "expected a non-empty array of rows");
    }
    const auto rows = static_cast<Eigen::Index>(doc.size());
    const auto cols = doc[0].is_array() ? static_cast<Eigen::Index>(doc[0].size()) : 0;
    CMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const std::string where = "$[" + std::to_string(r) + "]";
        const json &row = doc[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols || cols == 0) {
            throw SchemaError(where, "rows must be non-empty arrays of equal length");
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            const json &v = row[static_cast<std::size_t>(c)];
            const std::string at = where + "[" + std::to_string(c) + "]";
            if (v.is_number()) {
                m(r, c) = Complex(v.get<double>(), 0);
            } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
                m(r, c) = Complex(v[0].get<double>(), v[1].get<double>());
            } else {
                throw SchemaError(at, "entry must be a number or a [re, im] pair");
            }
        }
    }
    return m;
}

}  // namespace oamc

