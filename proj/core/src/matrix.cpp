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

#include "holevo/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "holevo/error.hpp"

namespace holevo {

namespace {

double hermitian_defect(const CMatrix& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

}  // namespace

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

HermMatrix::HermMatrix(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) {
        throw_validation("HermMatrix", "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                           ", expected square");
    }
    if (m.size() > 0) {
        double defect = hermitian_defect(m);
        if (defect > tol * std::max(1.0, max_abs(m))) {
            throw_validation("HermMatrix", "symmetry violation: max |m_ij - conj(m_ji)| = " + std::to_string(defect));
        }
    }
    m_ = (m + m.adjoint()) * 0.5;
}

HermMatrix HermMatrix::hermitian_part(const CMatrix& m) {
    HermMatrix h;
    h.m_ = (m + m.adjoint()) * 0.5;
    return h;
}

HermMatrix HermMatrix::from_real(const RMatrix& m) { return hermitian_part(m.cast<cplx>()); }

HermMatrix HermMatrix::identity(Eigen::Index dim) { return hermitian_part(CMatrix::Identity(dim, dim)); }

HermMatrix HermMatrix::zero(Eigen::Index dim) { return hermitian_part(CMatrix::Zero(dim, dim)); }

HermMatrix HermMatrix::operator+(const HermMatrix& o) const { return hermitian_part(m_ + o.m_); }

HermMatrix HermMatrix::operator-(const HermMatrix& o) const { return hermitian_part(m_ - o.m_); }

HermMatrix HermMatrix::operator*(double s) const { return hermitian_part(m_ * s); }

HermMatrix HermMatrix::operator-() const { return hermitian_part(-m_); }

HermMatrix operator*(double s, const HermMatrix& m) { return m * s; }

Spectrum eig_hermitian(const HermMatrix& m) {
    // SelfAdjointEigenSolver already returns ascending eigenvalues.
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m.matrix());
    if (es.info() != Eigen::Success) {
        throw_precision("eig_hermitian", "eigensolver did not converge");
    }
    return {es.eigenvalues(), es.eigenvectors()};
}

Spectrum eig_hermitian(const CMatrix& m, double tol) { return eig_hermitian(HermMatrix(m, tol)); }

double trace_norm(const HermMatrix& m) {
    if (m.dim() == 0) return 0.0;
    return eig_hermitian(m).values.cwiseAbs().sum();
}

double trace_norm_antisymmetric(const RMatrix& a) {
    if (a.size() == 0) return 0.0;
    return trace_norm(HermMatrix::hermitian_part(cplx(0.0, 1.0) * a.cast<cplx>()));
}

double min_eigenvalue(const HermMatrix& m) { return eig_hermitian(m).values(0); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

HermMatrix kron(const HermMatrix& a, const HermMatrix& b) {
    return HermMatrix::hermitian_part(kron(a.matrix(), b.matrix()));
}

HermMatrix anticomm_solve(const HermMatrix& rho, const HermMatrix& d, const AnticommOptions& opts) {
    const Eigen::Index n = rho.dim();
    if (d.dim() != n) {
        throw_validation("anticomm_solve", "rho is " + std::to_string(n) + "-dimensional but d is " +
                                               std::to_string(d.dim()) + "-dimensional");
    }
    double tr = std::abs(d.matrix().trace());
    if (tr > opts.trace_tol * std::max(1.0, max_abs(d.matrix()))) {
        throw_validation("anticomm_solve",
                         "inconsistent equation: d is not traceless (|tr d| = " + std::to_string(tr) + ")");
    }

    Spectrum sp = eig_hermitian(rho);
    const RVector& lam = sp.values;
    const CMatrix& u = sp.vectors;
    const double cutoff = opts.kernel_threshold * std::max(lam(n - 1), 0.0);

    CMatrix dt = u.adjoint() * d.matrix() * u;
    CMatrix lt = CMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            double s = lam(i) + lam(j);
            if (s > cutoff) lt(i, j) = 2.0 * dt(i, j) / s;
        }
    }
    HermMatrix l = HermMatrix::hermitian_part(u * lt * u.adjoint());

    // Residual outside the kernel-kernel block, measured in the eigenbasis of rho.
    CMatrix res = u.adjoint() * (0.5 * (l.matrix() * rho.matrix() + rho.matrix() * l.matrix()) - d.matrix()) * u;
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (lam(i) + lam(j) > cutoff) worst += std::norm(res(i, j));
        }
    }
    worst = std::sqrt(worst);
    if (worst > opts.residual_tol * std::max(1.0, max_abs(d.matrix()))) {
        throw_validation("anticomm_solve",
                         "rank deficiency: residual on the support of rho is " + std::to_string(worst));
    }
    return l;
}

RMatrix sqrt_psd(const RMatrix& m) {
    Eigen::SelfAdjointEigenSolver<RMatrix> es(0.5 * (m + m.transpose()));
    const RVector& lam = es.eigenvalues();
    // Eigenvalues at rounding level would otherwise contribute sqrt(eps)-sized
    // noise, which matters for singular costs.
    const double top = lam.size() ? lam.cwiseAbs().maxCoeff() : 0.0;
    const double floor = 4.0 * static_cast<double>(lam.size()) * std::numeric_limits<double>::epsilon() * top;
    RVector s(lam.size());
    for (Eigen::Index k = 0; k < lam.size(); ++k) s(k) = lam(k) > floor ? std::sqrt(lam(k)) : 0.0;
    return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().transpose();
}

HermMatrix abs_hermitian(const HermMatrix& h) {
    Spectrum sp = eig_hermitian(h);
    return HermMatrix::hermitian_part(sp.vectors * sp.values.cwiseAbs().asDiagonal() * sp.vectors.adjoint());
}

HermMatrix pauli(int k) {
    const cplx i(0.0, 1.0);
    CMatrix m(2, 2);
    switch (k) {
        case 0:
            m << 1, 0, 0, 1;
            break;
        case 1:
            m << 0, 1, 1, 0;
            break;
        case 2:
            m << 0, -i, i, 0;
            break;
        case 3:
            m << 1, 0, 0, -1;
            break;
        default:
            throw_validation("pauli", "index must be 0..3, got " + std::to_string(k));
    }
    return HermMatrix(m);
}

std::vector<HermMatrix> hermitian_basis(Eigen::Index d) {
    std::vector<HermMatrix> out;
    out.reserve(d * d);
    out.push_back(HermMatrix::identity(d) * (1.0 / std::sqrt(static_cast<double>(d))));
    const double h = 1.0 / std::sqrt(2.0);
    const cplx i(0.0, 1.0);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = j + 1; k < d; ++k) {
            CMatrix s = CMatrix::Zero(d, d);
            s(j, k) = h;
            s(k, j) = h;
            out.push_back(HermMatrix::hermitian_part(s));
            CMatrix a = CMatrix::Zero(d, d);
            a(j, k) = -i * h;
            a(k, j) = i * h;
            out.push_back(HermMatrix::hermitian_part(a));
        }
    }
    for (Eigen::Index l = 1; l < d; ++l) {
        CMatrix g = CMatrix::Zero(d, d);
        const double norm = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
        for (Eigen::Index k = 0; k < l; ++k) g(k, k) = norm;
        g(l, l) = -static_cast<double>(l) * norm;
        out.push_back(HermMatrix::hermitian_part(g));
    }
    return out;
}

RVector hermitian_coordinates(const HermMatrix& m, const std::vector<HermMatrix>& basis) {
    RVector x(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t a = 0; a < basis.size(); ++a) {
        // tr(B m) for Hermitian B and m is the real part of sum conj(B_ij) m_ij.
        x(static_cast<Eigen::Index>(a)) = basis[a].matrix().cwiseProduct(m.matrix().conjugate()).sum().real();
    }
    return x;
}

HermMatrix from_coordinates(const RVector& x, const std::vector<HermMatrix>& basis) {
    const Eigen::Index d = basis.front().dim();
    CMatrix m = CMatrix::Zero(d, d);
    for (std::size_t a = 0; a < basis.size(); ++a) m += x(static_cast<Eigen::Index>(a)) * basis[a].matrix();
    return HermMatrix::hermitian_part(m);
}

}  // namespace holevo
