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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oamc/elements.hpp"

namespace oamc {

// --- structural counts ----------------------------------------------------

struct ResourceReport {
    std::int64_t beam_splitters = 0;
    std::int64_t phase_shifters = 0;
    std::int64_t dove_prisms = 0;
    std::int64_t holograms = 0;
    std::int64_t mirrors = 0;
    std::int64_t pbs = 0;
    std::int64_t hwp = 0;
    std::int64_t permutations = 0;
    std::int64_t ideal_swaps = 0;
    /// Beam splitters contributed by IdealSwap elements via the closed form.
    std::int64_t formula_beam_splitters = 0;
    bool formula_derived = false;

    bool operator==(const ResourceReport &) const = default;
};

/// Direct tally. Each IdealSwap adds N_SWAP(n, d) beam splitters and sets
/// formula_derived.
ResourceReport count_netlist(const Netlist &nl);

// --- closed forms ---------------------------------------------------------

enum class Formula {
    sorter,         // N_S(d)
    reck,           // N_P(d)
    universal,      // N_O(d)
    x,              // N_X(d)
    xk,             // N_X(d, k), 1 <= k <= d/2
    swap,           // N_SWAP(n, d)
    universal_par,  // N_O^par(n, d)
    x_par,          // N_X^par(n, d), n >= d
    xk_par,         // N_X^par(n, d, k), n >= d, 1 <= k <= d/2
};

struct FormulaParams {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::int64_t k = 0;
};

std::string to_string(Formula f);
Formula formula_from_string(const std::string &s);

/// Exact beam-splitter count; RegimeError names the violated condition.
std::int64_t formula_counts(Formula f, const FormulaParams &p);

enum class RatioKind { reck, perm, x, xk, xk_half };

std::string to_string(RatioKind r);
RatioKind ratio_kind_from_string(const std::string &s);

struct RatioReport {
    std::int64_t parallel = 0;  // numerator count
    std::int64_t naive = 0;     // denominator count (n copies)
    double exact = 0;
    double asymptotic = 0;
};

/// Parallelized over naive beam-splitter ratio. xk_half ignores k and uses
/// k = d/2, with the upper-bound asymptote.
RatioReport ratio(RatioKind kind, std::int64_t n, std::int64_t d, std::int64_t k = 1);

struct Fig6Cell {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::int64_t k = 0;
    std::int64_t k_eff = 0;  // min(k, d-k): powers above d/2 run backwards
    std::int64_t naive = 0;
    std::int64_t parallelized = 0;
    std::string error;  // non-empty if the cell is out of regime
};

/// Naive n*N_X(d,k) against N_X^par(n,d,k) for d = 2, 4, ... <= n and
/// 1 <= k <= d-1.
std::vector<Fig6Cell> fig6_table(std::int64_t n = 16);

// --- losses ---------------------------------------------------------------

enum class LossScheme { universal, naive_parallel, parallelized };

std::string to_string(LossScheme s);
LossScheme loss_scheme_from_string(const std::string &s);

struct LossReport {
    LossScheme scheme = LossScheme::universal;
    double T = 1;
    std::int64_t d = 0;
    std::int64_t n = 0;
    /// Elements traversed by the photon launched in each port.
    std::vector<double> per_photon_depths;
    /// Exponent of T for all photons surviving.
    std::int64_t total_exponent = 0;
    double all_photon_transmittance = 1;
    /// Mean single-photon transmittance T^(total_exponent / photons).
    double per_photon_transmittance = 1;
    /// Per-photon transmittance ratio parallelized / naive, T^(2 log2 d).
    double per_photon_penalty_factor = 1;
};

/// L(d) = d + 10 log2 d per photon for the universal scheme; n = d copies
/// for naive_parallel (d^2 + 10 d log2 d) and d^2 + 12 d log2 d for the
/// parallelized scheme.
LossReport loss_model(std::int64_t d, std::int64_t n, double T, LossScheme scheme);

/// Expected number of non-phase-shifter elements traversed by a photon in
/// `input`. Path permutations and ideal swaps count as zero.
double measured_depth(const Netlist &nl, const Mode &input);

// --- periodicity ----------------------------------------------------------

struct PeriodicityReport {
    std::int64_t d = 0;
    std::int64_t a_lo = 0;
    std::int64_t a_hi = 0;
    std::vector<std::int64_t> subspaces;
    /// Distance of each subspace block to the a = 0 block.
    std::vector<double> distances;
    double max_distance = 0;
    /// Largest deviation of any block from unitarity (amplitude leaving the
    /// subspace).
    double max_unitarity_defect = 0;
};

/// Block on span{|stride (a d + j)>_O |p>_P : 0 <= j < d, p in paths} for
/// every a in [a_lo, a_hi], compared to the a = 0 block.
PeriodicityReport check_periodicity(const Netlist &nl, std::int64_t d, std::int64_t a_lo, std::int64_t a_hi,
                                    const std::vector<int> &paths = {0}, std::int64_t stride = 1);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

struct PeriodBound {
    std::int64_t certified = 1;  // lcm of reduced denominators
    std::int64_t product = 1;    // product of the given denominators
};

/// Eigenphases given as fractions num/den of 2 pi.
PeriodBound controlled_period_bound(const std::vector<Rational> &phases);
/// Fractions of 2 pi as reals; throws std::invalid_argument for values with
/// no rational form of denominator <= max_den within tol.
PeriodBound controlled_period_bound(const std::vector<double> &phase_fractions, std::int64_t max_den = 10000,
                                    double tol = 1e-12);

// --- output ---------------------------------------------------------------

std::string to_json(const ResourceReport &r);
std::string to_json(const LossReport &r);
std::string to_json(const PeriodicityReport &r);
std::string to_json(const std::vector<Fig6Cell> &cells);

/// Aligned columns; the first row is the header.
std::string format_table(const std::vector<std::vector<std::string>> &rows);
/// Fixed-point rendering used in tables.
std::string format_double(double v, int precision = 6);

}  // namespace oamc
