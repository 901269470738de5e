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

#include "gram_lmi.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace holevo::detail {

namespace {

RVector realify(const CMatrix& m) {
    RVector v(2 * m.size());
    Eigen::Index k = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            v(k++) = m(i, j).real();
            v(k++) = m(i, j).imag();
        }
    }
    return v;
}

}  // namespace

RMatrix cost_factor(const RMatrix& c) {
    Eigen::SelfAdjointEigenSolver<RMatrix> es(0.5 * (c + c.transpose()));
    const RVector& lam = es.eigenvalues();
    const double top = lam.size() ? lam.cwiseAbs().maxCoeff() : 0.0;
    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = 0; k < lam.size(); ++k) {
        if (lam(k) > 1e-12 * top) keep.push_back(k);
    }
    RMatrix kf(c.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) {
        kf.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]) * std::sqrt(lam(keep[j]));
    }
    return kf;
}

GramLmiResult solve_gram_lmi(const CMatrix& m0, const std::vector<CMatrix>& mk, const SdpOptions& opts) {
    const Eigen::Index r = m0.rows();
    const Eigen::Index s = m0.cols();
    const Eigen::Index k_in = static_cast<Eigen::Index>(mk.size());

    // Directions of w that move M(w) at all; the rest would make the Schur
    // matrix singular.
    RMatrix basis_map = RMatrix::Zero(k_in, 0);
    std::vector<CMatrix> dirs;
    if (k_in > 0) {
        RMatrix t(2 * r * s, k_in);
        for (Eigen::Index k = 0; k < k_in; ++k) t.col(k) = realify(mk[k]);
        Eigen::JacobiSVD<RMatrix> svd(t, Eigen::ComputeThinV);
        const RVector& sv = svd.singularValues();
        const double top = sv.size() > 0 ? sv(0) : 0.0;
        Eigen::Index q = 0;
        while (q < sv.size() && sv(q) > 1e-10 * top && top > 0.0) ++q;
        basis_map = svd.matrixV().leftCols(q);
        for (Eigen::Index l = 0; l < q; ++l) {
            CMatrix d = CMatrix::Zero(r, s);
            for (Eigen::Index k = 0; k < k_in; ++k) d += basis_map(k, l) * mk[k];
            dirs.push_back(d);
        }
    }
    const Eigen::Index q = static_cast<Eigen::Index>(dirs.size());
    const Eigen::Index nw = s * (s + 1) / 2;
    const Eigen::Index h = s + r;

    SdpProblem prob;
    prob.blocks = {2 * h};
    {
        CMatrix f0 = CMatrix::Zero(h, h);
        f0.bottomLeftCorner(r, s) = m0;
        f0.topRightCorner(s, r) = m0.adjoint();
        f0.bottomRightCorner(r, r) = CMatrix::Identity(r, r);
        prob.c = {complex_psd_embed(f0)};
    }
    for (Eigen::Index a = 0; a < s; ++a) {
        for (Eigen::Index b = a; b < s; ++b) {
            CMatrix e = CMatrix::Zero(h, h);
            e(a, b) = 1.0;
            e(b, a) = 1.0;
            prob.constraints.push_back({{RMatrix(-complex_psd_embed(e))}, a == b ? -1.0 : 0.0});
        }
    }
    for (const CMatrix& d : dirs) {
        CMatrix e = CMatrix::Zero(h, h);
        e.bottomLeftCorner(r, s) = d;
        e.topRightCorner(s, r) = d.adjoint();
        prob.constraints.push_back({{RMatrix(-complex_psd_embed(e))}, 0.0});
    }

    GramLmiResult out;
    out.sdp = solve(prob, opts);
    out.free_vars = static_cast<int>(q);
    out.lower = -out.sdp.primal_value;

    const RVector& y = out.sdp.y;
    out.w_matrix = RMatrix::Zero(s, s);
    Eigen::Index idx = 0;
    for (Eigen::Index a = 0; a < s; ++a) {
        for (Eigen::Index b = a; b < s; ++b) {
            out.w_matrix(a, b) = y(idx);
            out.w_matrix(b, a) = y(idx);
            ++idx;
        }
    }
    RVector u = y.segment(nw, q);
    out.w = basis_map * u;
    return out;
}

}  // namespace holevo::detail
