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

#include "holevo/hcr.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <string>

#include "gram_lmi.hpp"
#include "holevo/error.hpp"

namespace holevo {

namespace {

double trace_norm_objective(const CMatrix& z, const CostMatrix& c) {
    const RMatrix sc = c.sqrt();
    const RMatrix im = z.imag();
    return (c.matrix() * z.real()).trace() + trace_norm_antisymmetric(sc * (0.5 * (im - im.transpose())) * sc);
}

}  // namespace

CMatrix gram_operator(const HermMatrix& rho, const std::vector<HermMatrix>& basis) {
    const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
    CMatrix s(n, n);
    std::vector<CMatrix> brho;
    brho.reserve(basis.size());
    for (const HermMatrix& b : basis) brho.push_back(b.matrix() * rho.matrix());
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            // tr(B_a B_b rho) = sum_ij (B_a)_ij (B_b rho)_ji
            s(a, b) = basis[a].matrix().transpose().cwiseProduct(brho[b]).sum();
        }
    }
    return 0.5 * (s + s.adjoint());
}

CMatrix z_matrix(const HermMatrix& rho, const std::vector<HermMatrix>& x) {
    const Eigen::Index p = static_cast<Eigen::Index>(x.size());
    CMatrix z(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        for (Eigen::Index j = 0; j < p; ++j) z(i, j) = (rho.matrix() * x[i].matrix() * x[j].matrix()).trace();
    }
    return 0.5 * (z + z.adjoint());
}

double evaluate_candidate(const ModelPoint& pt, const std::vector<HermMatrix>& x, const CostMatrix& c, double lu_tol) {
    const int p = pt.param_count();
    if (static_cast<int>(x.size()) != p || c.size() != p) {
        throw_validation("evaluate_candidate", "expected " + std::to_string(p) + " operators and a " +
                                                   std::to_string(p) + "x" + std::to_string(p) + " cost");
    }
    std::string bad;
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            const double v = (pt.grads[i].matrix() * x[j].matrix()).trace().real();
            const double res = v - (i == j ? 1.0 : 0.0);
            if (std::abs(res) > lu_tol) {
                bad += " (" + std::to_string(i) + "," + std::to_string(j) + "):" + std::to_string(res);
            }
        }
    }
    if (!bad.empty()) {
        throw_validation("evaluate_candidate",
                         "local unbiasedness violated, residuals tr(d_i rho X_j) - delta_ij:" + bad);
    }
    return trace_norm_objective(z_matrix(pt.rho, x), c);
}

HcrSolution hcr_bound(const ModelPoint& pt, const CostMatrix& c, const HcrOptions& opts) {
    const int p = pt.param_count();
    const Eigen::Index d = pt.dim();
    const Eigen::Index d2 = d * d;
    if (c.size() != p) throw_validation("hcr_bound", "cost size does not match the parameter count");
    if (p > d2 - 1) throw_validation("hcr_bound", "more parameters than traceless directions");

    const std::vector<HermMatrix> basis = hermitian_basis(d);

    // S = R^dagger R by eigen square root, dropping the null space.
    const CMatrix s = gram_operator(pt.rho, basis);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(s);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = 0; k < d2; ++k) {
        if (es.eigenvalues()(k) > opts.clip) keep.push_back(k);
    }
    const Eigen::Index r = static_cast<Eigen::Index>(keep.size());
    CMatrix rmat(r, d2);
    for (Eigen::Index k = 0; k < r; ++k) {
        const Eigen::Index e = keep[k];
        rmat.row(k) = std::sqrt(es.eigenvalues()(e)) * es.eigenvectors().col(e).adjoint();
    }

    // Local unbiasedness D^T x_i = e_i, with D_ai = tr(B_a d_i rho).
    RMatrix dmat(d2, p);
    for (int i = 0; i < p; ++i) dmat.col(i) = hermitian_coordinates(pt.grads[i], basis);
    Eigen::JacobiSVD<RMatrix> dsvd(dmat, Eigen::ComputeFullU);
    const RVector& dsv = dsvd.singularValues();
    if (!(dsv(p - 1) > 1e-10 * dsv(0))) {
        throw_validation("hcr_bound", "unidentifiable parameters: the derivatives of rho are linearly dependent");
    }
    const RMatrix x0 = dmat * (dmat.transpose() * dmat).inverse();
    const RMatrix null_d = dsvd.matrixU().rightCols(d2 - p);

    const RMatrix kf = detail::cost_factor(c.matrix());
    const Eigen::Index sdim = kf.cols();

    // M(w) = R X K with X = X0 + sum over (i, l) of w_il n_l e_i^T.
    const CMatrix m0 = rmat * x0.cast<cplx>() * kf.cast<cplx>();
    std::vector<CMatrix> mk;
    mk.reserve(static_cast<std::size_t>(p * null_d.cols()));
    const CMatrix rn = rmat * null_d.cast<cplx>();
    for (int i = 0; i < p; ++i) {
        for (Eigen::Index l = 0; l < null_d.cols(); ++l) mk.push_back(rn.col(l) * kf.row(i).cast<cplx>());
    }

    detail::GramLmiResult g = detail::solve_gram_lmi(m0, mk, opts.sdp);
    if (!g.sdp.optimal()) {
        throw_convergence("hcr_bound", std::string("SDP stopped with status ") + status_name(g.sdp.status) + " after " +
                                           std::to_string(g.sdp.iterations) + " iterations (gap " +
                                           std::to_string(g.sdp.gap) + ")");
    }

    RMatrix xc = x0;
    {
        Eigen::Index k = 0;
        for (int i = 0; i < p; ++i) {
            for (Eigen::Index l = 0; l < null_d.cols(); ++l) xc.col(i) += g.w(k++) * null_d.col(l);
        }
    }

    HcrSolution out;
    out.sdp = g.sdp;
    out.free_vars = g.free_vars;
    out.lower = g.lower;
    for (int i = 0; i < p; ++i) {
        HermMatrix xi = from_coordinates(xc.col(i), basis);
        const double shift = (pt.rho.matrix() * xi.matrix()).trace().real();
        out.x_ops.push_back(xi - HermMatrix::identity(d) * shift);
    }
    out.z_matrix = z_matrix(pt.rho, out.x_ops);
    out.value = trace_norm_objective(out.z_matrix, c);

    const RMatrix re = out.z_matrix.real();
    const RMatrix im = out.z_matrix.imag();
    if (sdim == p) {
        // V = Re Z + K^{-T} |K^T Im Z K| K^{-1} attains tr(C V) = value.
        const RMatrix kinv = kf.inverse();
        const RMatrix inner_im = kf.transpose() * im * kf;
        const RMatrix abs_im =
            abs_hermitian(HermMatrix::hermitian_part(cplx(0.0, 1.0) * inner_im.cast<cplx>())).matrix().real();
        out.v_matrix = re + kinv.transpose() * abs_im * kinv;
        out.v_attains_value = true;
    } else {
        const RMatrix abs_im =
            abs_hermitian(HermMatrix::hermitian_part(cplx(0.0, 1.0) * im.cast<cplx>())).matrix().real();
        out.v_matrix = re + abs_im;
        out.v_attains_value = false;
    }
    out.v_matrix = 0.5 * (out.v_matrix + out.v_matrix.transpose()).eval();
    return out;
}

MulticopyValues hcr_multicopy_check(const ParametricModel& m, const RVector& theta, const CostMatrix& c, int n,
                                    const HcrOptions& opts, Eigen::Index cap) {
    MulticopyValues out;
    out.single = hcr_bound(m.evaluate(theta), c, opts).value;
    out.multi = n == 1 ? out.single : hcr_bound(multi_copy(m, n, cap).evaluate(theta), c, opts).value;
    return out;
}

BoundReport bound_report(const ModelPoint& pt, const CostMatrix& c, const HcrOptions& opts) {
    BoundReport rep;
    SldSet s = sld_set(pt);
    auto attempt = [&](const char* name, std::optional<double>& slot, auto&& fn) {
        try {
            slot = fn();
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::validation) throw;
            rep.notes[name] = e.what();
        }
    };
    attempt("sld", rep.sld, [&] { return sld_cr_bound(s, c); });
    attempt("rld", rep.rld, [&] { return rld_bound(pt, c); });
    attempt("hgm", rep.hgm, [&] { return hgm_bound(s, c); });
    attempt("hcr", rep.hcr, [&] {
        HcrSolution h = hcr_bound(pt, c, opts);
        rep.diagnostics["hcr_lower"] = h.lower;
        rep.diagnostics["sdp_iterations"] = h.sdp.iterations;
        rep.diagnostics["sdp_gap"] = h.sdp.gap;
        return h.value;
    });
    const CompatibilityReport cr = compatibility_report(s, c);
    rep.diagnostics["max_mean_commutator"] = cr.max_commutator;
    rep.diagnostics["predicts_hcr_equals_sld"] = cr.predicts_hcr_equals_sld ? 1.0 : 0.0;
    return rep;
}

}  // namespace holevo
