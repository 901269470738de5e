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

#include <gtest/gtest.h>

#include <Eigen/SVD>

#include "holevo/error.hpp"
#include "holevo/hcr.hpp"
#include "oracles.hpp"

namespace holevo {
namespace {

using oracle::Rng;

double max_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

TEST(HermMatrix, RejectsNonHermitianInput) {
    CMatrix m(2, 2);
    m << 1.0, 2.0, 0.0, 1.0;
    EXPECT_THROW(HermMatrix{m}, Error);
    EXPECT_THROW(HermMatrix{CMatrix::Zero(2, 3)}, Error);
}

TEST(HermMatrix, StoresExactHermitianPart) {
    CMatrix m(2, 2);
    m << 1.0, cplx(0.5, 1e-14), cplx(0.5, 0.0), 2.0;
    const HermMatrix h(m);
    EXPECT_EQ(h(0, 1), std::conj(h(1, 0)));
    EXPECT_DOUBLE_EQ(h.trace(), 3.0);
}

TEST(Eig, AscendingAndReconstructs) {
    Rng rng(1);
    for (int d = 2; d <= 6; ++d) {
        const HermMatrix h = oracle::random_traceless(d, rng) + HermMatrix::identity(d) * 0.3;
        const Spectrum s = eig_hermitian(h);
        for (Eigen::Index k = 1; k < s.values.size(); ++k) EXPECT_LE(s.values(k - 1), s.values(k));
        const CMatrix back = s.vectors * s.values.cast<cplx>().asDiagonal() * s.vectors.adjoint();
        EXPECT_LT(max_diff(back, h.matrix()), 1e-13);
    }
}

TEST(TraceNorm, MatchesSingularValues) {
    Rng rng(2);
    for (int d = 2; d <= 5; ++d) {
        const HermMatrix h = oracle::random_traceless(d, rng);
        Eigen::JacobiSVD<CMatrix> svd(h.matrix());
        EXPECT_NEAR(trace_norm(h), svd.singularValues().sum(), 1e-13);

        const RMatrix g = oracle::random_real(d, d, rng);
        const RMatrix a = g - g.transpose();
        Eigen::JacobiSVD<RMatrix> rsvd(a);
        EXPECT_NEAR(trace_norm_antisymmetric(a), rsvd.singularValues().sum(), 1e-12);
    }
}

TEST(AnticommSolve, FullRankResidual) {
    Rng rng(3);
    for (int d = 2; d <= 5; ++d) {
        const HermMatrix rho = oracle::random_density(d, rng);
        const HermMatrix dr = oracle::random_traceless(d, rng);
        const HermMatrix l = anticomm_solve(rho, dr);
        const CMatrix res = 0.5 * (l.matrix() * rho.matrix() + rho.matrix() * l.matrix()) - dr.matrix();
        EXPECT_LT(res.cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(AnticommSolve, PureStateUsesTwiceTheDerivative) {
    // For rho = |psi><psi| and d = |dpsi><psi| + h.c. with <psi|dpsi> = 0, L = 2 d.
    CVector psi(2), dpsi(2);
    psi << 1.0, 0.0;
    dpsi << 0.0, cplx(0.3, 0.4);
    const HermMatrix rho(psi * psi.adjoint());
    const HermMatrix d = HermMatrix::hermitian_part(dpsi * psi.adjoint() + psi * dpsi.adjoint());
    const HermMatrix l = anticomm_solve(rho, d);
    EXPECT_LT(max_diff(l.matrix(), 2.0 * d.matrix()), 1e-14);
}

TEST(HermitianBasis, OrthonormalAndComplete) {
    for (int d = 1; d <= 4; ++d) {
        const auto basis = hermitian_basis(d);
        ASSERT_EQ(static_cast<int>(basis.size()), d * d);
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const cplx ip = (basis[a].matrix() * basis[b].matrix()).trace();
                EXPECT_NEAR(ip.real(), a == b ? 1.0 : 0.0, 1e-14);
                EXPECT_NEAR(ip.imag(), 0.0, 1e-14);
            }
        Rng rng(4);
        const HermMatrix h =
            d == 1 ? HermMatrix::identity(1) * 0.7 : oracle::random_traceless(d, rng) + HermMatrix::identity(d) * 0.7;
        const HermMatrix back = from_coordinates(hermitian_coordinates(h, basis), basis);
        EXPECT_LT(max_diff(back.matrix(), h.matrix()), 1e-14);
    }
}

TEST(GramOperator, AgreesWithStructureConstants) {
    // B_a B_b = sum_c tr(B_a B_b B_c) B_c, so S_ab = sum_c f_abc tr(B_c rho).
    Rng rng(5);
    for (int d = 2; d <= 3; ++d) {
        const auto basis = hermitian_basis(d);
        const HermMatrix rho = oracle::random_density(d, rng);
        const RVector coords = hermitian_coordinates(rho, basis);
        const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
        CMatrix expected = CMatrix::Zero(n, n);
        for (Eigen::Index a = 0; a < n; ++a)
            for (Eigen::Index b = 0; b < n; ++b)
                for (Eigen::Index c = 0; c < n; ++c)
                    expected(a, b) += (basis[a].matrix() * basis[b].matrix() * basis[c].matrix()).trace() * coords(c);
        EXPECT_LT(max_diff(gram_operator(rho, basis), expected), 1e-14);
    }
}

TEST(Kron, MatchesDefinition) {
    Rng rng(6);
    const CMatrix a = oracle::random_complex(2, 3, rng);
    const CMatrix b = oracle::random_complex(3, 2, rng);
    const CMatrix k = kron(a, b);
    ASSERT_EQ(k.rows(), 6);
    ASSERT_EQ(k.cols(), 6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 2; ++q) EXPECT_EQ(k(3 * i + p, 2 * j + q), a(i, j) * b(p, q));
}

TEST(Pauli, Algebra) {
    const cplx i(0.0, 1.0);
    EXPECT_LT(max_diff(pauli(1).matrix() * pauli(2).matrix(), i * pauli(3).matrix()), 1e-15);
    for (int k = 1; k <= 3; ++k) {
        EXPECT_LT(max_diff(pauli(k).matrix() * pauli(k).matrix(), CMatrix::Identity(2, 2)), 1e-15);
    }
    EXPECT_THROW(pauli(4), Error);
}

TEST(SqrtPsd, SquaresBackAndIsExactOnRankOne) {
    Rng rng(7);
    const RMatrix m = oracle::random_psd(4, rng);
    const RMatrix s = sqrt_psd(m);
    EXPECT_LT((s * s - m).cwiseAbs().maxCoeff(), 1e-13);

    // Rounding-level eigenvalues must not leak sqrt(eps) noise into the result.
    const RVector c = oracle::random_real(5, 1, rng);
    const RMatrix r1 = sqrt_psd(c * c.transpose());
    EXPECT_LT((r1 - c * c.transpose() / c.norm()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(AbsHermitian, MatchesSpectralDefinition) {
    Rng rng(8);
    const HermMatrix h = oracle::random_traceless(4, rng);
    const HermMatrix a = abs_hermitian(h);
    EXPECT_LT(max_diff(a.matrix() * a.matrix(), h.matrix() * h.matrix()), 1e-14);
    EXPECT_GE(min_eigenvalue(a), -1e-15);
    EXPECT_NEAR(a.trace(), trace_norm(h), 1e-14);
}

}  // namespace
}  // namespace holevo
