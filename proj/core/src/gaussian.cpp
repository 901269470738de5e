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

#include "holevo/gaussian.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <string>

#include "gram_lmi.hpp"
#include "holevo/error.hpp"

namespace holevo {

namespace {

constexpr double kHeisenbergSlack = 1e-9;
constexpr double kAncillaEpsilon = 1e-9;

CMatrix heisenberg_matrix(const RMatrix& v, const RMatrix& s) {
    return v.cast<cplx>() + cplx(0.0, 0.5) * s.cast<cplx>();
}

void check_cost(const GaussianShiftModel& g, const CostMatrix& c, const char* where) {
    if (c.size() != g.param_count()) {
        throw_validation(where, "cost is " + std::to_string(c.size()) + "x" + std::to_string(c.size()) +
                                    " but the model has " + std::to_string(g.param_count()) + " parameters");
    }
}

}  // namespace

RMatrix symplectic_form(int q_modes, int c_vars) {
    const int r = 2 * q_modes + c_vars;
    RMatrix s = RMatrix::Zero(r, r);
    for (int k = 0; k < q_modes; ++k) {
        s(2 * k, 2 * k + 1) = 1.0;
        s(2 * k + 1, 2 * k) = -1.0;
    }
    return s;
}

GaussianShiftModel::GaussianShiftModel(int q_modes, int c_vars, const RMatrix& a, const RMatrix& v)
    : q_(q_modes), c_(c_vars), a_(a), v_(v) {
    const char* where = "GaussianShiftModel";
    if (q_ < 0 || c_ < 0 || r_dim() == 0) throw_validation(where, "mode counts must be non-negative, not both zero");
    const int r = r_dim();
    if (v_.rows() != r || v_.cols() != r) {
        throw_validation(where, "covariance must be " + std::to_string(r) + "x" + std::to_string(r));
    }
    if (a_.rows() != r || a_.cols() < 1 || a_.cols() > r) {
        throw_validation(where,
                         "encoding map must be " + std::to_string(r) + " x p with 1 <= p <= " + std::to_string(r));
    }
    if ((v_ - v_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, v_.cwiseAbs().maxCoeff())) {
        throw_validation(where, "covariance is not symmetric");
    }
    v_ = 0.5 * (v_ + v_.transpose()).eval();
    Eigen::JacobiSVD<RMatrix> svd(a_);
    const RVector& sv = svd.singularValues();
    if (!(sv(sv.size() - 1) > 1e-10 * sv(0))) {
        throw_validation(where, "encoding map A does not have full column rank");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(heisenberg_matrix(v_, s()));
    const double lo = es.eigenvalues()(0);
    if (lo < -kHeisenbergSlack) {
        throw_validation(where, "uncertainty relation violated: min eigenvalue of V - iS/2 is " + std::to_string(lo));
    }
}

GaussianQfi gaussian_qfi(const GaussianShiftModel& g) {
    Eigen::SelfAdjointEigenSolver<RMatrix> es(g.v());
    if (!(es.eigenvalues()(0) > 1e-12 * std::max(1.0, es.eigenvalues().maxCoeff()))) {
        throw_validation("gaussian_qfi", "covariance V is singular");
    }
    const RMatrix vinv =
        es.eigenvectors() * es.eigenvalues().cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
    GaussianQfi out;
    out.sld_coefficients = g.a().transpose() * vinv;
    out.qfi = out.sld_coefficients * g.a();
    out.qfi = 0.5 * (out.qfi + out.qfi.transpose()).eval();
    return out;
}

double gaussian_linear_objective(const GaussianShiftModel& g, const CostMatrix& c, const RMatrix& b) {
    const RMatrix sc = c.sqrt();
    const RMatrix bsb = b * g.s() * b.transpose();
    return (c.matrix() * b * g.v() * b.transpose()).trace() +
           0.5 * trace_norm_antisymmetric(sc * (0.5 * (bsb - bsb.transpose())) * sc);
}

GaussianHcr gaussian_hcr(const GaussianShiftModel& g, const CostMatrix& c, bool force_sdp, const SdpOptions& opts) {
    check_cost(g, c, "gaussian_hcr");
    const int p = g.param_count();
    const int r = g.r_dim();
    GaussianHcr out;
    if (p == r && !force_sdp) {
        out.b = g.a().inverse();
        out.closed_form = true;
        out.value = gaussian_linear_objective(g, c, out.b);
        return out;
    }

    // V + iS/2 = G^dagger G.
    Eigen::SelfAdjointEigenSolver<CMatrix> es(heisenberg_matrix(g.v(), g.s()));
    std::vector<Eigen::Index> keep;
    const double top = es.eigenvalues().maxCoeff();
    for (Eigen::Index k = 0; k < r; ++k) {
        if (es.eigenvalues()(k) > 1e-14 * top) keep.push_back(k);
    }
    CMatrix gm(static_cast<Eigen::Index>(keep.size()), r);
    for (std::size_t k = 0; k < keep.size(); ++k) {
        gm.row(static_cast<Eigen::Index>(k)) =
            std::sqrt(es.eigenvalues()(keep[k])) * es.eigenvectors().col(keep[k]).adjoint();
    }

    const RMatrix& a = g.a();
    const RMatrix b0 = (a.transpose() * a).inverse() * a.transpose();
    Eigen::HouseholderQR<RMatrix> qr(a);
    const RMatrix q = qr.householderQ() * RMatrix::Identity(r, r);
    const RMatrix left_null = q.rightCols(r - p);  // L^T A = 0
    const RMatrix kf = detail::cost_factor(c.matrix());

    const CMatrix m0 = gm * b0.transpose().cast<cplx>() * kf.cast<cplx>();
    std::vector<CMatrix> mk;
    const CMatrix gl = gm * left_null.cast<cplx>();
    for (int i = 0; i < p; ++i) {
        for (int l = 0; l < r - p; ++l) mk.push_back(gl.col(l) * kf.row(i).cast<cplx>());
    }
    detail::GramLmiResult res = detail::solve_gram_lmi(m0, mk, opts);
    if (!res.sdp.optimal()) {
        throw_convergence("gaussian_hcr", std::string("SDP stopped with status ") + status_name(res.sdp.status));
    }
    RMatrix y = RMatrix::Zero(p, r - p);
    Eigen::Index k = 0;
    for (int i = 0; i < p; ++i) {
        for (int l = 0; l < r - p; ++l) y(i, l) = res.w(k++);
    }
    out.b = b0 + y * left_null.transpose();
    out.value = gaussian_linear_objective(g, c, out.b);
    out.sdp = res.sdp;
    return out;
}

double gaussian_rld_bound(const GaussianShiftModel& g, const CostMatrix& c) {
    check_cost(g, c, "gaussian_rld_bound");
    const CMatrix h = heisenberg_matrix(g.v(), g.s());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    if (!(es.eigenvalues()(0) > 1e-12 * std::max(1.0, es.eigenvalues().maxCoeff()))) {
        throw_validation("gaussian_rld_bound", "RLD undefined: V + iS/2 is singular (pure Gaussian state)");
    }
    const CMatrix hinv = es.eigenvectors() * es.eigenvalues().cwiseInverse().asDiagonal() * es.eigenvectors().adjoint();
    const CMatrix ac = g.a().cast<cplx>();
    const CMatrix fr = ac.transpose() * hinv * ac;
    const CMatrix inv = fr.inverse();
    const RMatrix sc = c.sqrt();
    const RMatrix im = inv.imag();
    return (c.matrix() * inv.real()).trace() + trace_norm_antisymmetric(sc * (0.5 * (im - im.transpose())) * sc);
}

LinearMeasurement optimal_linear_measurement(const GaussianShiftModel& g, const CostMatrix& c, const SdpOptions& opts) {
    const GaussianHcr h = gaussian_hcr(g, c, false, opts);
    const int r = g.r_dim();
    const int nq = 2 * g.q_modes();
    LinearMeasurement out;
    out.b = h.b;
    out.hcr_value = h.value;
    out.ancilla_cov = RMatrix::Zero(r, r);

    if (nq > 0) {
        const RMatrix pq = (c.sqrt() * h.b).leftCols(nq);
        const RMatrix sq = symplectic_form(g.q_modes(), 0);
        Eigen::JacobiSVD<RMatrix> svd(pq, Eigen::ComputeFullV);
        const RVector& sv = svd.singularValues();
        Eigen::Index k = 0;
        while (k < sv.size() && sv(k) > 1e-10 * sv(0) && sv(0) > 0.0) ++k;

        const RMatrix w = svd.matrixV();  // nq x nq, orthogonal
        const RMatrix sp = w.transpose() * sq * w;
        RMatrix vt = RMatrix::Zero(nq, nq);
        if (k > 0) {
            // On measured directions: V~ = 1/2 Sigma^{-1} |i M| Sigma^{-1},
            // M = Sigma W1^T S W1 Sigma.
            const RVector sig = sv.head(k);
            const RMatrix m = sig.asDiagonal() * sp.topLeftCorner(k, k) * sig.asDiagonal();
            const RMatrix abs_m =
                abs_hermitian(HermMatrix::hermitian_part(cplx(0.0, 1.0) * m.cast<cplx>())).matrix().real();
            const RVector sinv = sig.cwiseInverse();
            vt.topLeftCorner(k, k) = 0.5 * sinv.asDiagonal() * abs_m * sinv.asDiagonal();
        }
        if (k < nq) {
            // Unmeasured quantum directions: pad with epsilon and a large
            // conjugate variance so the ancilla is still a valid state.
            out.regularized = true;
            const Eigen::Index u = nq - k;
            vt.topLeftCorner(k, k) += kAncillaEpsilon * RMatrix::Identity(k, k);
            const CMatrix blk =
                vt.topLeftCorner(k, k).cast<cplx>() - cplx(0.0, 0.5) * sp.topLeftCorner(k, k).cast<cplx>();
            CMatrix need = cplx(0.0, 0.5) * sp.bottomRightCorner(u, u).cast<cplx>();
            if (k > 0) {
                need -= 0.25 * sp.bottomLeftCorner(u, k).cast<cplx>() * blk.inverse() *
                        sp.topRightCorner(k, u).cast<cplx>();
            }
            Eigen::SelfAdjointEigenSolver<CMatrix> nes(0.5 * (need + need.adjoint()));
            const double t = std::max(nes.eigenvalues().maxCoeff(), 0.0) + kAncillaEpsilon;
            vt.bottomRightCorner(u, u) = t * RMatrix::Identity(u, u);
        }
        RMatrix vq = w * vt * w.transpose();
        out.ancilla_cov.topLeftCorner(nq, nq) = 0.5 * (vq + vq.transpose());
    }

    Eigen::SelfAdjointEigenSolver<CMatrix> check(heisenberg_matrix(out.ancilla_cov, g.s()));
    if (check.eigenvalues()(0) < -kHeisenbergSlack * std::max(1.0, out.ancilla_cov.cwiseAbs().maxCoeff())) {
        throw_precision("optimal_linear_measurement", "ancilla covariance violates the uncertainty relation (" +
                                                          std::to_string(check.eigenvalues()(0)) + ")");
    }
    const RMatrix& b = out.b;
    out.measured_cost =
        (c.matrix() * b * g.v() * b.transpose()).trace() + (c.matrix() * b * out.ancilla_cov * b.transpose()).trace();
    return out;
}

}  // namespace holevo
