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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "oamc/analysis.hpp"
#include "oamc/intmath.hpp"
#include "oamc/synth.hpp"

namespace oamc::cli {

namespace {

using json = nlohmann::json;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string &s) {
    const auto colon = s.find(':', 1);
    try {
        if (colon == std::string::npos) {
            const std::int64_t a = std::stoll(s);
            return {a, a};
        }
        return {std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
    } catch (const std::logic_error &) {
        throw std::invalid_argument("subspace range \"" + s + "\" is not of the form a:b");
    }
}

std::vector<int> parse_int_list(const std::string &s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::logic_error &) {
            throw std::invalid_argument("\"" + item + "\" is not an integer");
        }
    }
    return out;
}

Rational parse_rational(const std::string &s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return {std::stoll(s), 1};
        return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
    } catch (const std::logic_error &) {
        throw std::invalid_argument("\"" + s + "\" is not a fraction a/b");
    }
}

json report_object(const ResourceReport &r) { return json::parse(to_json(r)); }

int annotation_int(const Netlist &nl, const std::string &key, int fallback) {
    const std::string v = nl.annotation(key);
    if (v.empty()) return fallback;
    try {
        return std::stoi(v);
    } catch (const std::logic_error &) {
        throw SchemaError("$.annotations." + key, "not an integer: " + v);
    }
}

// Gate selection flags shared by synth and verify.
struct GateFlags {
    std::string kind;
    int dim = 0;
    int power = 1;
    int paths = 0;
    int oam_dim = 0;
    int spacing = 1;
    std::string gate = "x";
    std::uint64_t seed = 1;
    std::string unitary_file;
    std::string swap = "ideal";

    CLI::Option *dim_opt = nullptr;
    CLI::Option *power_opt = nullptr;
    CLI::Option *paths_opt = nullptr;
    CLI::Option *oam_dim_opt = nullptr;
    CLI::Option *spacing_opt = nullptr;
    CLI::Option *gate_opt = nullptr;
    CLI::Option *unitary_opt = nullptr;
    CLI::Option *swap_opt = nullptr;

    void add(CLI::App *app) {
        dim_opt = app->add_option("--dim", dim, "OAM dimension d");
        power_opt = app->add_option("--power", power, "power k");
        paths_opt = app->add_option("--paths", paths, "number of paths n");
        oam_dim_opt = app->add_option("--oam-dim", oam_dim, "OAM control dimension of controlled gates");
        spacing_opt = app->add_option("--spacing", spacing, "OAM spacing m of the control ladder");
        gate_opt = app->add_option("--gate", gate, "unitary: x|z|fourier|identity|haar")
                       ->check(CLI::IsMember({"x", "z", "fourier", "identity", "haar"}));
        app->add_option("--seed", seed, "seed for --gate haar");
        unitary_opt = app->add_option("--unitary", unitary_file, "JSON file with rows of [re, im] pairs");
        swap_opt = app->add_option("--swap", swap, "swap realization: ideal|expanded")
                       ->check(CLI::IsMember({"ideal", "expanded"}));
    }

    bool explicit_unitary() const { return gate_opt->count() > 0 || unitary_opt->count() > 0; }

    CMatrix unitary(int d) const {
        if (!unitary_file.empty()) {
            CMatrix u = matrix_from_json(read_file(unitary_file));
            if (u.rows() != d && d > 0) {
                throw std::invalid_argument("unitary file is " + std::to_string(u.rows()) + "x" +
                                            std::to_string(u.cols()) + ", expected dimension " + std::to_string(d));
            }
            return u;
        }
        if (d < 1) throw std::invalid_argument("dimension must be given and >= 1");
        if (gate == "x") return pauli_x(d, power);
        if (gate == "z") return pauli_z(d, power);
        if (gate == "fourier") return fourier(d);
        if (gate == "identity") return CMatrix::Identity(d, d);
        return haar_unitary(d, seed);
    }

    std::string gate_label() const { return unitary_file.empty() ? gate : "file"; }
};

const std::vector<std::string> kKinds = {"xk", "z", "universal", "cu", "cz", "path-controlled", "parallel"};

int require_given(int v, const char *flag, const std::string &kind) {
    if (v <= 0) throw std::invalid_argument(kind + " requires " + flag);
    return v;
}

Netlist synth_netlist(const GateFlags &g) {
    const std::string &k = g.kind;
    auto tag_unitary = [&](Netlist nl, const CMatrix &u) {
        nl.annotations["gate"] = g.gate_label();
        nl.annotations["unitary"] = matrix_to_json(u);
        return nl;
    };
    if (k == "xk") return xk_gate(require_given(g.dim, "--dim", k), g.power);
    if (k == "z") return z_gate(require_given(g.dim, "--dim", k), g.power);
    if (k == "universal") {
        const int d = require_given(g.dim, "--dim", k);
        require_pow2(d, "d", "universal");
        const CMatrix u = g.unitary(d);
        return tag_unitary(universal_oam(u, d), u);
    }
    if (k == "cu") {
        const int n = require_given(g.paths, "--paths", k);
        const int d = require_given(g.oam_dim, "--oam-dim", k);
        const CMatrix u = g.unitary(n);
        return tag_unitary(controlled_u_spaced(u, d, g.spacing), u);
    }
    if (k == "cz") {
        return cz_gate(require_given(g.paths, "--paths", k), require_given(g.oam_dim, "--oam-dim", k));
    }
    const int d = require_given(g.dim, "--dim", k);
    const int n = require_given(g.paths, "--paths", k);
    require_pow2(d, "d", k.c_str());
    require_pow2(n, "n", k.c_str());
    const CMatrix u = g.unitary(d);
    const SwapMode mode = swap_mode_from_string(g.swap);
    if (k == "path-controlled") return tag_unitary(path_controlled(u, n, mode), u);
    return tag_unitary(parallelize(u, n, mode), u);
}

std::string kind_from_construction(const std::string &c) {
    if (c == "xk" || c == "z" || c == "universal" || c == "cz") return c;
    if (c == "controlled_u") return "cu";
    if (c == "path_controlled") return "path-controlled";
    if (c == "parallelized") return "parallel";
    return "";
}

struct Target {
    std::string label;
    CMatrix matrix;
    std::vector<Mode> inputs;
    std::int64_t period_d = 0;
    std::vector<int> paths{0};
    std::int64_t stride = 1;
};

CMatrix block_powers(const CMatrix &u, int blocks, bool powers) {
    const auto s = u.rows();
    CMatrix t = CMatrix::Zero(s * blocks, s * blocks);
    for (int b = 0; b < blocks; ++b) {
        t.block(b * s, b * s, s, s) = powers ? matrix_power(u, b) : u;
    }
    return t;
}

std::vector<int> iota_paths(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

// Resolves target flags against the netlist annotations.
Target resolve_target(GateFlags g, const Netlist &nl) {
    if (g.kind.empty()) g.kind = kind_from_construction(nl.annotation("construction"));
    if (g.kind.empty()) {
        throw std::invalid_argument("no --target given and the netlist has no recognised construction annotation");
    }
    if (std::find(kKinds.begin(), kKinds.end(), g.kind) == kKinds.end()) {
        throw std::invalid_argument("unknown target \"" + g.kind + "\"");
    }
    if (g.dim_opt->count() == 0) g.dim = annotation_int(nl, "d", 0);
    if (g.power_opt->count() == 0) g.power = annotation_int(nl, "k", 1);
    if (g.paths_opt->count() == 0) g.paths = annotation_int(nl, "n", 0);
    if (g.spacing_opt->count() == 0) g.spacing = annotation_int(nl, "m", 1);
    if (g.oam_dim_opt->count() == 0) g.oam_dim = annotation_int(nl, "d", 0);

    auto unitary = [&](int d) {
        if (g.explicit_unitary() || nl.annotation("unitary").empty()) return g.unitary(d);
        CMatrix u = matrix_from_json(nl.annotation("unitary"));
        if (u.rows() != d) throw std::invalid_argument("stored unitary does not match the target dimension");
        return u;
    };

    Target t;
    const std::string &k = g.kind;
    if (k == "xk" || k == "z" || k == "universal") {
        const int d = require_given(g.dim, "--dim", k);
        t.period_d = d;
        t.inputs = oam_ladder(0, d, 0);
        if (k == "xk") {
            t.matrix = pauli_x(d, g.power);
            t.label = "xk(d=" + std::to_string(d) + ",k=" + std::to_string(g.power) + ")";
        } else if (k == "z") {
            t.matrix = pauli_z(d, g.power);
            t.label = "z(d=" + std::to_string(d) + ",k=" + std::to_string(g.power) + ")";
        } else {
            t.matrix = unitary(d);
            t.label = "universal(d=" + std::to_string(d) + ")";
        }
        return t;
    }
    if (k == "cu" || k == "cz") {
        const int n = require_given(g.paths, "--paths", k);
        const int d = require_given(g.oam_dim, "--oam-dim", k);
        const CMatrix u = k == "cz" ? pauli_z(n) : unitary(n);
        for (int q = 0; q < d; ++q) {
            for (int p = 0; p < n; ++p) t.inputs.push_back(Mode{static_cast<std::int64_t>(g.spacing) * q, p, {}});
        }
        t.matrix = block_powers(u, d, true);
        t.period_d = d;
        t.paths = iota_paths(n);
        t.stride = g.spacing;
        t.label = k + "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ",m=" + std::to_string(g.spacing) + ")";
        return t;
    }
    const int d = require_given(g.dim, "--dim", k);
    const int n = require_given(g.paths, "--paths", k);
    const CMatrix u = unitary(d);
    const std::int64_t c = n > d ? n / d : 1;
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < d; ++q) t.inputs.push_back(Mode{c * q, p, {}});
    }
    t.matrix = block_powers(u, n, k == "path-controlled");
    t.period_d = d;
    t.paths = iota_paths(n);
    t.stride = c;
    t.label = k + "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
    return t;
}

// CLI11 would read "-2:2" as a flag; glue such values to their option.
std::vector<std::string> glue_negative_values(const std::vector<std::string> &args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if ((args[i] == "--subspaces" || args[i] == "--oam") && i + 1 < args.size() && args[i + 1].size() > 1 &&
            args[i + 1][0] == '-' && std::isdigit(static_cast<unsigned char>(args[i + 1][1]))) {
            out.push_back(args[i] + "=" + args[i + 1]);
            ++i;
        } else {
            out.push_back(args[i]);
        }
    }
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string> &raw_args, std::ostream &out, std::ostream &err) {
    CLI::App app{"OAM optics compiler and simulator", "oamc"};
    app.require_subcommand(1);

    // synth
    GateFlags synth_flags;
    std::string synth_out;
    auto *synth = app.add_subcommand("synth", "synthesize a gate into a netlist");
    synth->add_option("kind", synth_flags.kind, "xk|z|universal|cu|cz|path-controlled|parallel")
        ->required()
        ->check(CLI::IsMember(kKinds));
    synth_flags.add(synth);
    synth->add_option("--out", synth_out, "netlist output file (stdout if omitted)");

    // sim
    std::string sim_file;
    std::int64_t sim_oam = 0;
    int sim_path = 0;
    std::string sim_pol;
    auto *sim = app.add_subcommand("sim", "propagate one basis mode through a netlist");
    sim->add_option("netlist", sim_file)->required();
    sim->add_option("--oam", sim_oam, "input OAM value");
    sim->add_option("--path", sim_path, "input path");
    sim->add_option("--pol", sim_pol, "input polarization H|V")->check(CLI::IsMember({"H", "V"}));

    // verify
    GateFlags verify_flags;
    std::string verify_file;
    double tol = 1e-8;
    std::string subspaces;
    auto *verify = app.add_subcommand("verify", "compare a netlist with a target gate");
    verify->add_option("netlist", verify_file)->required();
    verify->add_option("--target", verify_flags.kind, "xk|z|universal|cu|cz|path-controlled|parallel");
    verify_flags.add(verify);
    verify->add_option("--tol", tol, "pass tolerance on every distance")->capture_default_str();
    verify->add_option("--subspaces", subspaces, "periodicity check over OAM subspaces a:b");

    // count
    std::string count_file;
    bool count_text = false;
    auto *count = app.add_subcommand("count", "tally the elements of a netlist");
    count->add_option("netlist", count_file)->required();
    count->add_flag("--text", count_text, "aligned table instead of JSON");

    // formulas
    bool f_fig6 = false;
    bool f_loss = false;
    bool f_json = false;
    double f_T = 0.9;
    std::int64_t f_dim = 0;
    std::int64_t f_paths = 16;
    std::int64_t f_power = 1;
    std::string f_ratio;
    std::string f_formula;
    auto *formulas = app.add_subcommand("formulas", "closed-form counts, ratios and losses");
    formulas->add_flag("--fig6", f_fig6, "naive vs parallelized X^k table for d <= n");
    formulas->add_flag("--loss", f_loss, "loss model for all schemes");
    formulas->add_option("--ratio", f_ratio, "ratio kind: reck|perm|x|xk|xk_half");
    formulas->add_option("--formula", f_formula,
                         "single count: sorter|reck|universal|x|xk|swap|universal_par|x_par|xk_par");
    formulas->add_option("--T", f_T, "mean element transmittance")->capture_default_str();
    formulas->add_option("--dim", f_dim, "OAM dimension d");
    formulas->add_option("--paths", f_paths, "number of paths n")->capture_default_str();
    formulas->add_option("--power", f_power, "power k")->capture_default_str();
    formulas->add_flag("--json", f_json, "JSON output");

    // periodicity
    std::string p_file;
    std::int64_t p_dim = 0;
    std::string p_subspaces = "-2:2";
    std::string p_paths = "0";
    std::int64_t p_stride = 1;
    double p_tol = 1e-9;
    std::string p_bound;
    auto *periodicity = app.add_subcommand("periodicity", "subspace periodicity and controlled-gate period bounds");
    periodicity->add_option("netlist", p_file);
    periodicity->add_option("--dim", p_dim, "subspace size d");
    periodicity->add_option("--subspaces", p_subspaces, "range a:b")->capture_default_str();
    periodicity->add_option("--paths", p_paths, "comma-separated input paths")->capture_default_str();
    periodicity->add_option("--stride", p_stride, "OAM stride of the ladder")->capture_default_str();
    periodicity->add_option("--tol", p_tol, "pass tolerance")->capture_default_str();
    periodicity->add_option("--bound", p_bound, "eigenphase fractions of 2pi, e.g. 1/2,1/3");

    std::vector<std::string> args = glue_negative_values(raw_args);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (synth->parsed()) {
            const Netlist nl = synth_netlist(synth_flags);
            const std::string text = serialize(nl);
            if (synth_out.empty()) {
                out << text;
                err << to_json(count_netlist(nl));
            } else {
                write_file(synth_out, text);
                out << to_json(count_netlist(nl));
            }
            return kPass;
        }

        if (sim->parsed()) {
            const Netlist nl = deserialize(read_file(sim_file));
            std::optional<Pol> pol;
            if (!sim_pol.empty()) pol = sim_pol == "H" ? Pol::H : Pol::V;
            const Mode in{sim_oam, sim_path, pol};
            const ModeWindow w = required_window(
                nl, ModeWindow(sim_oam, sim_oam, std::max(nl.window_hint.n_paths, sim_path + 1), pol.has_value()));
            StateVector psi = apply_netlist(nl, basis_state(w, in));
            psi.prune(1e-12);
            json doc;
            doc["input"] = {{"oam", in.oam}, {"path", in.path}};
            doc["output"] = json::array();
            for (const auto &[m, a] : psi.amplitudes()) {
                json o{{"oam", m.oam}, {"path", m.path}, {"re", a.real()}, {"im", a.imag()}, {"prob", std::norm(a)}};
                if (m.pol) o["pol"] = *m.pol == Pol::H ? "H" : "V";
                doc["output"].push_back(o);
            }
            doc["norm"] = psi.norm();
            out << doc.dump(2) << "\n";
            return kPass;
        }

        if (verify->parsed()) {
            const Netlist nl = deserialize(read_file(verify_file));
            const Target t = resolve_target(verify_flags, nl);
            const CMatrix got = subspace_transfer(nl, t.inputs, t.inputs);
            const double dist = phase_aligned_distance(got, t.matrix);
            bool pass = dist <= tol;
            json doc;
            doc["target"] = t.label;
            doc["distance"] = dist;
            doc["tol"] = tol;
            doc["subspace_distances"] = json::array();
            if (!subspaces.empty()) {
                const auto [lo, hi] = parse_range(subspaces);
                const PeriodicityReport r = check_periodicity(nl, t.period_d, lo, hi, t.paths, t.stride);
                for (std::size_t i = 0; i < r.subspaces.size(); ++i) {
                    doc["subspace_distances"].push_back({{"a", r.subspaces[i]}, {"distance", r.distances[i]}});
                }
                pass = pass && r.max_distance <= tol;
            }
            doc["pass"] = pass;
            doc["counts"] = report_object(count_netlist(nl));
            out << doc.dump(2) << "\n";
            return pass ? kPass : kFail;
        }

        if (count->parsed()) {
            const ResourceReport r = count_netlist(deserialize(read_file(count_file)));
            if (!count_text) {
                out << to_json(r);
                return kPass;
            }
            auto s = [](std::int64_t v) { return std::to_string(v); };
            out << format_table({{"element", "count"},
                                 {"beam_splitters", s(r.beam_splitters)},
                                 {"phase_shifters", s(r.phase_shifters)},
                                 {"dove_prisms", s(r.dove_prisms)},
                                 {"holograms", s(r.holograms)},
                                 {"mirrors", s(r.mirrors)},
                                 {"pbs", s(r.pbs)},
                                 {"hwp", s(r.hwp)},
                                 {"permutations", s(r.permutations)},
                                 {"ideal_swaps", s(r.ideal_swaps)}});
            if (r.formula_derived) {
                out << "note: " << r.formula_beam_splitters
                    << " beam splitters are formula-derived from ideal swap blocks\n";
            }
            return kPass;
        }

        if (formulas->parsed()) {
            if (!f_fig6 && !f_loss && f_ratio.empty() && f_formula.empty()) {
                err << "error: formulas needs one of --fig6, --loss, --ratio, --formula\n";
                return kUsage;
            }
            if (f_fig6) {
                const auto cells = fig6_table(f_paths);
                if (f_json) {
                    out << to_json(cells);
                } else {
                    std::vector<std::vector<std::string>> rows{{"n", "d", "k", "naive", "parallelized"}};
                    for (const auto &c : cells) {
                        if (c.error.empty()) {
                            rows.push_back({std::to_string(c.n), std::to_string(c.d), std::to_string(c.k),
                                            std::to_string(c.naive), std::to_string(c.parallelized)});
                        } else {
                            rows.push_back({std::to_string(c.n), std::to_string(c.d), std::to_string(c.k), "n/a",
                                            "n/a: " + c.error});
                        }
                    }
                    out << format_table(rows);
                }
            }
            if (f_loss) {
                if (f_dim <= 0) throw std::invalid_argument("--loss requires --dim");
                std::vector<LossReport> reps;
                for (LossScheme s : {LossScheme::universal, LossScheme::naive_parallel, LossScheme::parallelized}) {
                    reps.push_back(loss_model(f_dim, f_dim, f_T, s));
                }
                if (f_json) {
                    json arr = json::array();
                    for (const auto &r : reps) arr.push_back(json::parse(to_json(r)));
                    out << arr.dump(2) << "\n";
                } else {
                    std::vector<std::vector<std::string>> rows{
                        {"scheme", "exponent", "all_photon", "per_photon", "penalty"}};
                    for (const auto &r : reps) {
                        rows.push_back({to_string(r.scheme), std::to_string(r.total_exponent),
                                        format_double(r.all_photon_transmittance, 6),
                                        format_double(r.per_photon_transmittance, 6),
                                        format_double(r.per_photon_penalty_factor, 6)});
                    }
                    out << format_table(rows);
                }
            }
            if (!f_ratio.empty()) {
                if (f_dim <= 0) throw std::invalid_argument("--ratio requires --dim");
                const RatioReport r = ratio(ratio_kind_from_string(f_ratio), f_paths, f_dim, f_power);
                if (f_json) {
                    out << json{{"kind", f_ratio}, {"n", f_paths}, {"d", f_dim}, {"k", f_power},
                                {"parallel", r.parallel}, {"naive", r.naive}, {"exact", r.exact},
                                {"asymptotic", r.asymptotic}}
                                   .dump(2)
                        << "\n";
                } else {
                    out << format_table({{"kind", "n", "d", "k", "parallel", "naive", "exact", "asymptotic"},
                                         {f_ratio, std::to_string(f_paths), std::to_string(f_dim),
                                          std::to_string(f_power), std::to_string(r.parallel),
                                          std::to_string(r.naive), format_double(r.exact, 8),
                                          format_double(r.asymptotic, 8)}});
                }
            }
            if (!f_formula.empty()) {
                const Formula f = formula_from_string(f_formula);
                const std::int64_t v = formula_counts(f, {f_paths, f_dim, f_power});
                if (f_json) {
                    out << json{{"formula", f_formula}, {"n", f_paths}, {"d", f_dim}, {"k", f_power}, {"value", v}}
                               .dump(2)
                        << "\n";
                } else {
                    out << f_formula << "(n=" << f_paths << ", d=" << f_dim << ", k=" << f_power << ") = " << v
                        << "\n";
                }
            }
            return kPass;
        }

        if (periodicity->parsed()) {
            if (!p_bound.empty()) {
                std::vector<Rational> q;
                std::stringstream in(p_bound);
                std::string item;
                while (std::getline(in, item, ',')) q.push_back(parse_rational(item));
                const PeriodBound b = controlled_period_bound(q);
                out << json{{"certified_lcm", b.certified}, {"denominator_product", b.product}}.dump(2) << "\n";
                if (p_file.empty()) return kPass;
            }
            if (p_file.empty()) {
                err << "error: periodicity needs a netlist or --bound\n";
                return kUsage;
            }
            const Netlist nl = deserialize(read_file(p_file));
            const std::int64_t d = p_dim > 0 ? p_dim : annotation_int(nl, "d", 0);
            const auto [lo, hi] = parse_range(p_subspaces);
            const PeriodicityReport r = check_periodicity(nl, d, lo, hi, parse_int_list(p_paths), p_stride);
            out << to_json(r);
            return r.max_distance <= p_tol ? kPass : kFail;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace oamc::cli
