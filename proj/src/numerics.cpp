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

#include "oamc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace oamc {

namespace {

void require_square(const CMatrix &m, const char *what) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument(std::string(what) + ": matrix is not square (" + std::to_string(m.rows()) +
                                    "x" + std::to_string(m.cols()) + ")");
    }
}

// Phase of the largest-magnitude entry; ties resolve to the lowest index.
void make_canonical_phase(Eigen::Ref<Eigen::VectorXcd> v) {
    Eigen::Index best = 0;
    double best_abs = -1;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double a = std::abs(v(i));
        if (a > best_abs + 1e-12) {
            best_abs = a;
            best = i;
        }
    }
    if (best_abs <= 0) {
        return;
    }
    v *= std::conj(v(best)) / best_abs;
}

}  // namespace

double wrap_2pi(double angle) {
    constexpr double two_pi = 2 * std::numbers::pi;
    double r = std::fmod(angle, two_pi);
    if (r < 0) {
        r += two_pi;
    }
    if (r >= two_pi) {
        r = 0;
    }
    return r;
}

bool is_unitary(const CMatrix &m, double tol) {
    require_square(m, "is_unitary");
    CMatrix g = m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols());
    return g.cwiseAbs().maxCoeff() <= tol || m.size() == 0;
}

EigenDecomp eig_unitary(const CMatrix &u) {
    require_square(u, "eig_unitary");
    if (!is_unitary(u)) {
        throw std::invalid_argument("eig_unitary: input is not unitary within tolerance");
    }
    const Eigen::Index n = u.rows();
    EigenDecomp out;
    if (n == 0) {
        return out;
    }

    // For a normal matrix the complex Schur form is diagonal: u = Z T Z^dagger.
    Eigen::ComplexSchur<CMatrix> schur(u);
    const CMatrix &z = schur.matrixU();
    const CMatrix &t = schur.matrixT();

    constexpr double two_pi = 2 * std::numbers::pi;
    std::vector<double> phase(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        double phi = wrap_2pi(-std::arg(t(j, j)));
        if (two_pi - phi < kDegeneracyTol) {
            phi = 0;
        }
        phase[j] = phi;
    }
    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return phase[a] < phase[b]; });

    CMatrix vecs(n, n);
    out.phases.resize(n);
    Eigen::Index col = 0;
    for (Eigen::Index start = 0; start < n;) {
        Eigen::Index stop = start + 1;
        while (stop < n && phase[order[stop]] - phase[order[stop - 1]] < kDegeneracyTol) {
            ++stop;
        }
        const Eigen::Index size = stop - start;
        CMatrix cluster(n, size);
        double mean = 0;
        for (Eigen::Index c = 0; c < size; ++c) {
            cluster.col(c) = z.col(order[start + c]);
            mean += phase[order[start + c]];
        }
        mean /= static_cast<double>(size);

        if (size == 1) {
            Eigen::VectorXcd v = cluster.col(0).normalized();
            make_canonical_phase(v);
            vecs.col(col) = v;
            out.phases[col] = phase[order[start]];
            ++col;
        } else {
            // Canonical basis: project e_0, e_1, ... and orthonormalize in index order.
            CMatrix proj = cluster * cluster.adjoint();
            Eigen::Index found = 0;
            for (Eigen::Index i = 0; i < n && found < size; ++i) {
                Eigen::VectorXcd v = proj.col(i);
                for (Eigen::Index f = 0; f < found; ++f) {
                    auto prev = vecs.col(col + f);
                    v -= prev * prev.dot(v);
                }
                double norm = v.norm();
                if (norm < 1e-6) {
                    continue;
                }
                v /= norm;
                make_canonical_phase(v);
                vecs.col(col + found) = v;
                ++found;
            }
            if (found != size) {
                throw std::runtime_error("eig_unitary: failed to build a basis for a degenerate eigenspace");
            }
            for (Eigen::Index c = 0; c < size; ++c) {
                out.phases[col + c] = mean;
            }
            col += size;
        }
        start = stop;
    }
    out.m = vecs.adjoint();
    return out;
}

CMatrix reconstruct(const EigenDecomp &e) {
    const auto n = static_cast<Eigen::Index>(e.phases.size());
    Eigen::VectorXcd diag(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        diag(j) = std::polar(1.0, -e.phases[j]);
    }
    return e.m.adjoint() * diag.asDiagonal() * e.m;
}

CMatrix matrix_power(const CMatrix &u, int k) {
    require_square(u, "matrix_power");
    if (k < 0) {
        throw std::invalid_argument("matrix_power: negative exponent");
    }
    CMatrix result = CMatrix::Identity(u.rows(), u.cols());
    CMatrix base = u;
    while (k > 0) {
        if (k & 1) {
            result = result * base;
        }
        k >>= 1;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) {
        return 0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double phase_aligned_distance(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("phase_aligned_distance: shape mismatch (" + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()) + ")");
    }
    if (a.size() == 0) {
        return 0;
    }
    const auto f = [&](double th) { return (a - std::polar(1.0, th) * b).cwiseAbs().maxCoeff(); };

    // f is a max of smooth unimodal functions of theta. A grid locates every
    // basin; golden-section search then refines each local grid minimum.
    constexpr int kGrid = 720;
    constexpr double kStep = 2 * std::numbers::pi / kGrid;
    std::vector<double> grid(kGrid);
    for (int s = 0; s < kGrid; ++s) grid[static_cast<std::size_t>(s)] = f(s * kStep);

    std::vector<double> starts;
    Eigen::Index bi = 0, bj = 0;
    if (b.cwiseAbs().maxCoeff(&bi, &bj) > 0) starts.push_back(std::arg(a(bi, bj)) - std::arg(b(bi, bj)));
    for (int s = 0; s < kGrid; ++s) {
        const double here = grid[static_cast<std::size_t>(s)];
        if (here <= grid[static_cast<std::size_t>((s + kGrid - 1) % kGrid)] &&
            here <= grid[static_cast<std::size_t>((s + 1) % kGrid)]) {
            starts.push_back(s * kStep);
        }
    }

    double best = *std::min_element(grid.begin(), grid.end());
    const double g = (std::sqrt(5.0) - 1) / 2;
    for (double c : starts) {
        double lo = c - kStep;
        double hi = c + kStep;
        double x1 = hi - g * (hi - lo);
        double x2 = lo + g * (hi - lo);
        double f1 = f(x1);
        double f2 = f(x2);
        for (int it = 0; it < 60; ++it) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - g * (hi - lo);
                f1 = f(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + g * (hi - lo);
                f2 = f(x2);
            }
        }
        best = std::min({best, f1, f2, f(c)});
    }
    return best;
}

CMatrix pauli_x(int d, int power) {
    CMatrix x = CMatrix::Zero(d, d);
    int k = ((power % d) + d) % d;
    for (int q = 0; q < d; ++q) {
        x((q + k) % d, q) = 1;
    }
    return x;
}

CMatrix pauli_z(int d, int power) {
    CMatrix z = CMatrix::Zero(d, d);
    for (int q = 0; q < d; ++q) {
        z(q, q) = std::polar(1.0, 2 * std::numbers::pi * ((static_cast<long long>(q) * power) % d) / d);
    }
    return z;
}

CMatrix fourier(int d) {
    CMatrix f(d, d);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            f(j, k) = s * std::polar(1.0, 2 * std::numbers::pi * ((static_cast<long long>(j) * k) % d) / d);
        }
    }
    return f;
}

CMatrix haar_unitary(int d, std::uint64_t seed) {
    if (d < 1) {
        throw std::invalid_argument("haar_unitary: d must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix g(d, d);
    for (int c = 0; c < d; ++c) {
        for (int r = 0; r < d; ++r) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR();
    for (int j = 0; j < d; ++j) {
        const double a = std::abs(r(j, j));
        if (a > 0) q.col(j) *= r(j, j) / a;
    }
    return q;
}

}  // namespace oamc
