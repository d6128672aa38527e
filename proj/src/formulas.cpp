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

namespace {

std::int64_t lg(std::int64_t x, const char *name, const char *where) {
    require_pow2(x, name, where);
    return log2_exact(x);
}

void require_power_range(std::int64_t d, std::int64_t k, const char *where) {
    if (d < 2 || k < 1 || 2 * k > d) {
        throw RegimeError(std::string(where) + ": k = " + std::to_string(k) + " outside 1..d/2 for d = " +
                          std::to_string(d));
    }
}

void require_n_ge_d(std::int64_t n, std::int64_t d, const char *where) {
    if (n < d) {
        throw RegimeError(std::string(where) + ": requires n >= d (n = " + std::to_string(n) +
                          ", d = " + std::to_string(d) + ")");
    }
}

// m with 2^m <= k < 2^(m+1).
std::int64_t floor_log2(std::int64_t k) { return 63 - std::countl_zero(static_cast<std::uint64_t>(k)); }

}  // namespace

std::string to_string(Formula f) {
    switch (f) {
    case Formula::sorter: return "sorter";
    case Formula::reck: return "reck";
    case Formula::universal: return "universal";
    case Formula::x: return "x";
    case Formula::xk: return "xk";
    case Formula::swap: return "swap";
    case Formula::universal_par: return "universal_par";
    case Formula::x_par: return "x_par";
    case Formula::xk_par: return "xk_par";
    }
    return "?";
}

Formula formula_from_string(const std::string &s) {
    for (Formula f : {Formula::sorter, Formula::reck, Formula::universal, Formula::x, Formula::xk, Formula::swap,
                      Formula::universal_par, Formula::x_par, Formula::xk_par}) {
        if (to_string(f) == s) return f;
    }
    throw std::invalid_argument("unknown formula \"" + s + "\"");
}

std::int64_t formula_counts(Formula f, const FormulaParams &p) {
    const auto n = p.n;
    const auto d = p.d;
    const auto k = p.k;
    switch (f) {
    case Formula::sorter:
        lg(d, "d", "N_S");
        return 2 * (d - 1);
    case Formula::reck:
        if (d < 1) throw RegimeError("N_P: d must be >= 1");
        return d * (d - 1) / 2;
    case Formula::universal:
        return formula_counts(Formula::reck, p) + 2 * formula_counts(Formula::sorter, p);
    case Formula::x:
        return 4 * lg(d, "d", "N_X");
    case Formula::xk: {
        const auto ld = lg(d, "d", "N_X(d,k)");
        require_power_range(d, k, "N_X(d,k)");
        const auto m = floor_log2(k);
        return 4 * (k * (ld - (m + 1)) + (std::int64_t{1} << (m + 1)) - 1);
    }
    case Formula::swap: {
        const auto ln = lg(n, "n", "N_SWAP");
        const auto ld = lg(d, "d", "N_SWAP");
        if (n <= d) return n / 2 * ln + d * ln - 3 * n + 2 * d + 1;
        return n / 2 * ln + d * ld + n - 2 * d + 1;
    }
    case Formula::universal_par:
        return formula_counts(Formula::reck, p) + 2 * formula_counts(Formula::swap, p);
    case Formula::x_par: {
        const auto ln = lg(n, "n", "N_X^par");
        lg(d, "d", "N_X^par");
        require_n_ge_d(n, d, "N_X^par");
        return n * ln + 2 * n - 2;
    }
    case Formula::xk_par: {
        const auto ln = lg(n, "n", "N_X^par(n,d,k)");
        lg(d, "d", "N_X^par(n,d,k)");
        require_n_ge_d(n, d, "N_X^par(n,d,k)");
        require_power_range(d, k, "N_X^par(n,d,k)");
        const auto m = floor_log2(k);
        // 2 d k / 2^m is an integer because 2^m <= d/2.
        return n * ln + 2 * n - 4 * k + 2 + 2 * d * k / (std::int64_t{1} << m) + 2 * d * (m - 1);
    }
    }
    throw std::invalid_argument("formula_counts: unknown formula");
}

std::string to_string(RatioKind r) {
    switch (r) {
    case RatioKind::reck: return "reck";
    case RatioKind::perm: return "perm";
    case RatioKind::x: return "x";
    case RatioKind::xk: return "xk";
    case RatioKind::xk_half: return "xk_half";
    }
    return "?";
}

RatioKind ratio_kind_from_string(const std::string &s) {
    for (RatioKind r : {RatioKind::reck, RatioKind::perm, RatioKind::x, RatioKind::xk, RatioKind::xk_half}) {
        if (to_string(r) == s) return r;
    }
    throw std::invalid_argument("unknown ratio kind \"" + s + "\"");
}

RatioReport ratio(RatioKind kind, std::int64_t n, std::int64_t d, std::int64_t k) {
    RatioReport r;
    const FormulaParams p{n, d, k};
    const double ln = std::log2(static_cast<double>(n));
    const double ld = std::log2(static_cast<double>(d));
    const double dn = static_cast<double>(n);
    const double dd = static_cast<double>(d);
    switch (kind) {
    case RatioKind::reck:
        r.parallel = formula_counts(Formula::universal_par, p);
        r.naive = n * formula_counts(Formula::universal, p);
        r.asymptotic = 1.0 / dn + 2.0 * ln / (dd * dd);
        break;
    case RatioKind::perm:
        // No beam splitters for the path permutation itself.
        r.parallel = 2 * formula_counts(Formula::swap, p);
        r.naive = n * 2 * formula_counts(Formula::sorter, p);
        r.asymptotic = ld / (2.0 * dn) + ln / (4.0 * dd);
        break;
    case RatioKind::x:
        r.parallel = formula_counts(Formula::x_par, p);
        r.naive = n * formula_counts(Formula::x, p);
        r.asymptotic = ln / (4.0 * ld);
        break;
    case RatioKind::xk:
        r.parallel = formula_counts(Formula::xk_par, p);
        r.naive = n * formula_counts(Formula::xk, p);
        r.asymptotic = ln / (4.0 * static_cast<double>(k) * ld);
        break;
    case RatioKind::xk_half: {
        const FormulaParams half{n, d, d / 2};
        r.parallel = formula_counts(Formula::xk_par, half);
        r.naive = n * formula_counts(Formula::xk, half);
        r.asymptotic = 3.0 * ln / (4.0 * dd);
        break;
    }
    }
    r.exact = static_cast<double>(r.parallel) / static_cast<double>(r.naive);
    return r;
}

std::vector<Fig6Cell> fig6_table(std::int64_t n) {
    require_pow2(n, "n", "fig6_table");
    std::vector<Fig6Cell> cells;
    for (std::int64_t d = 2; d <= n; d *= 2) {
        for (std::int64_t k = 1; k < d; ++k) {
            Fig6Cell c{n, d, k, std::min(k, d - k), 0, 0, {}};
            try {
                c.naive = n * formula_counts(Formula::xk, {n, d, c.k_eff});
                c.parallelized = formula_counts(Formula::xk_par, {n, d, c.k_eff});
            } catch (const RegimeError &e) {
                c.error = e.what();
            }
            cells.push_back(c);
        }
    }
    return cells;
}

}  // namespace oamc
