// Copyright 2026 The holevo Authors
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

#ifndef HOLEVO_MATRIX_HPP
#define HOLEVO_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace holevo {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Default Hermiticity tolerance, scaled by max(1, largest entry magnitude).
inline constexpr double kHermitianTol = 1e-12;

/// A square complex matrix known to be Hermitian.
///
/// Construction checks |m_ij - conj(m_ji)| against the tolerance and then
/// stores the exact Hermitian part, so downstream code may rely on exact
/// symmetry.
class HermMatrix {
   public:
    HermMatrix() = default;

    /// Throws a validation error if `m` is not square or not Hermitian within `tol`.
    explicit HermMatrix(const CMatrix& m, double tol = kHermitianTol);

    /// (m + m^dagger) / 2 without any check. For values produced internally.
    static HermMatrix hermitian_part(const CMatrix& m);
    static HermMatrix from_real(const RMatrix& m);
    static HermMatrix identity(Eigen::Index dim);
    static HermMatrix zero(Eigen::Index dim);

    Eigen::Index dim() const { return m_.rows(); }
    const CMatrix& matrix() const { return m_; }
    cplx operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
    double trace() const { return m_.trace().real(); }

    HermMatrix operator+(const HermMatrix& o) const;
    HermMatrix operator-(const HermMatrix& o) const;
    HermMatrix operator*(double s) const;
    HermMatrix operator-() const;

   private:
    CMatrix m_;
};

HermMatrix operator*(double s, const HermMatrix& m);

/// Eigen-decomposition with eigenvalues sorted ascending.
struct Spectrum {
    RVector values;
    CMatrix vectors;  ///< Columns are orthonormal eigenvectors.
};

Spectrum eig_hermitian(const HermMatrix& m);

/// Same as above for a raw matrix; raises a validation error on asymmetry.
Spectrum eig_hermitian(const CMatrix& m, double tol = kHermitianTol);

double trace_norm(const HermMatrix& m);

/// Trace norm of a real antisymmetric matrix, via the Hermitian matrix i*a.
double trace_norm_antisymmetric(const RMatrix& a);

double min_eigenvalue(const HermMatrix& m);

CMatrix kron(const CMatrix& a, const CMatrix& b);
HermMatrix kron(const HermMatrix& a, const HermMatrix& b);

struct AnticommOptions {
    double kernel_threshold = 1e-10;  ///< Relative to the largest eigenvalue of rho.
    double trace_tol = 1e-10;
    double residual_tol = 1e-8;
};

/// Solves (L rho + rho L) / 2 = d for Hermitian L.
///
/// In the eigenbasis of rho, L_ij = 2 d_ij / (l_i + l_j). Entries whose
/// eigenvalue sum falls below the kernel threshold are set to zero; the
/// residual is checked only outside the kernel-kernel block.
HermMatrix anticomm_solve(const HermMatrix& rho, const HermMatrix& d, const AnticommOptions& opts = {});

/// Square root of a real symmetric PSD matrix. Eigenvalues below
/// 4 n eps times the largest magnitude, negative ones included, are set to zero.
RMatrix sqrt_psd(const RMatrix& m);

/// Absolute value |h| = sqrt(h^2) of a Hermitian matrix.
HermMatrix abs_hermitian(const HermMatrix& h);

/// Pauli matrices indexed 0 = identity, 1 = x, 2 = y, 3 = z.
HermMatrix pauli(int k);

/// Orthonormal Hermitian basis of d x d matrices under tr(A B): the
/// normalized identity first, then off-diagonal symmetric and antisymmetric
/// generalized Gell-Mann matrices, then the diagonal ones.
std::vector<HermMatrix> hermitian_basis(Eigen::Index d);

/// Real coordinates tr(B_a m) of a Hermitian matrix in a basis from hermitian_basis.
RVector hermitian_coordinates(const HermMatrix& m, const std::vector<HermMatrix>& basis);

/// Inverse of hermitian_coordinates.
HermMatrix from_coordinates(const RVector& x, const std::vector<HermMatrix>& basis);

/// Largest absolute entry, used to scale tolerances.
double max_abs(const CMatrix& m);

}  // namespace holevo

#endif  // HOLEVO_MATRIX_HPP
