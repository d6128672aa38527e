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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace oamc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Default tolerance for unitarity checks on synthesis inputs.
inline constexpr double kUnitaryTol = 1e-9;
/// Eigenphases closer than this are treated as one degenerate cluster.
inline constexpr double kDegeneracyTol = 1e-9;

/// U = m^dagger * diag(exp(-i * phases[j])) * m, phases ascending in [0, 2pi).
struct EigenDecomp {
    CMatrix m;
    std::vector<double> phases;
};

bool is_unitary(const CMatrix &m, double tol = kUnitaryTol);

/// Deterministic eigendecomposition of a unitary matrix. Degenerate
/// eigenspaces get the basis obtained by projecting the standard basis
/// vectors in index order and Gram-Schmidt orthonormalizing them.
EigenDecomp eig_unitary(const CMatrix &u);

/// Rebuilds m^dagger * diag(exp(-i phi)) * m.
CMatrix reconstruct(const EigenDecomp &e);

CMatrix matrix_power(const CMatrix &u, int k);

/// Minimum over a global phase of max |a - e^{i theta} b|, starting from the
/// alignment on the largest entry of b and refined over the whole circle.
double phase_aligned_distance(const CMatrix &a, const CMatrix &b);

/// max |a_ij - b_ij|
double max_abs_diff(const CMatrix &a, const CMatrix &b);

/// Wraps an angle into [0, 2pi).
double wrap_2pi(double angle);

CMatrix pauli_x(int d, int power = 1);
CMatrix pauli_z(int d, int power = 1);
CMatrix fourier(int d);

/// Haar-distributed d x d unitary from QR of a complex Gaussian matrix,
/// seeded mt19937_64.
CMatrix haar_unitary(int d, std::uint64_t seed);

}  // namespace oamc
