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

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "oamc/analysis.hpp"
#include "oamc/intmath.hpp"

namespace oamc {

namespace {

CMatrix subspace_block(const Netlist &nl, std::int64_t d, std::int64_t a, const std::vector<int> &paths,
                       std::int64_t stride) {
    std::vector<Mode> modes;
    for (int p : paths) {
        auto ladder = oam_ladder(stride * a * d, static_cast<int>(d), p, stride);
        modes.insert(modes.end(), ladder.begin(), ladder.end());
    }
    return subspace_transfer(nl, modes, modes);
}

}  // namespace

PeriodicityReport check_periodicity(const Netlist &nl, std::int64_t d, std::int64_t a_lo, std::int64_t a_hi,
                                    const std::vector<int> &paths, std::int64_t stride) {
    require_pow2(d, "d", "check_periodicity");
    if (a_lo > a_hi) {
        throw std::invalid_argument("check_periodicity: empty subspace range");
    }
    if (paths.empty() || stride < 1) {
        throw std::invalid_argument("check_periodicity: need at least one path and stride >= 1");
    }
    PeriodicityReport r;
    r.d = d;
    r.a_lo = a_lo;
    r.a_hi = a_hi;
    const CMatrix ref = subspace_block(nl, d, 0, paths, stride);
    for (std::int64_t a = a_lo; a <= a_hi; ++a) {
        const CMatrix block = a == 0 ? ref : subspace_block(nl, d, a, paths, stride);
        const double dist = phase_aligned_distance(block, ref);
        const CMatrix gram = block.adjoint() * block;
        const double defect = max_abs_diff(gram, CMatrix::Identity(gram.rows(), gram.cols()));
        r.subspaces.push_back(a);
        r.distances.push_back(dist);
        r.max_distance = std::max(r.max_distance, dist);
        r.max_unitarity_defect = std::max(r.max_unitarity_defect, defect);
    }
    return r;
}

PeriodBound controlled_period_bound(const std::vector<Rational> &phases) {
    PeriodBound b;
    for (const auto &q : phases) {
        if (q.den <= 0) {
            throw std::invalid_argument("controlled_period_bound: denominators must be positive");
        }
        const std::int64_t reduced = q.den / std::gcd(q.num, q.den);
        b.certified = std::lcm(b.certified, reduced);
        b.product *= q.den;
    }
    return b;
}

PeriodBound controlled_period_bound(const std::vector<double> &phase_fractions, std::int64_t max_den, double tol) {
    std::vector<Rational> q;
    for (double x : phase_fractions) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("controlled_period_bound: non-finite phase");
        }
        // Continued-fraction convergents up to max_den.
        std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
        double rest = x;
        bool found = false;
        for (int iter = 0; iter < 64; ++iter) {
            const double a = std::floor(rest);
            const auto ai = static_cast<std::int64_t>(a);
            const std::int64_t h2 = ai * h1 + h0;
            const std::int64_t k2 = ai * k1 + k0;
            if (k2 > max_den) break;
            h0 = h1;
            h1 = h2;
            k0 = k1;
            k1 = k2;
            if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= tol) {
                found = true;
                break;
            }
            const double frac = rest - a;
            if (frac <= 0) break;
            rest = 1.0 / frac;
        }
        if (!found) {
            throw std::invalid_argument("controlled_period_bound: phase fraction " + std::to_string(x) +
                                        " is not rational within tolerance; no periodic behaviour");
        }
        q.push_back({h1, k1});
    }
    return controlled_period_bound(q);
}

}  // namespace oamc
