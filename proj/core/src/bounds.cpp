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

#include "holevo/bounds.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "holevo/error.hpp"

namespace holevo {

namespace {

constexpr double kCommutatorTol = 1e-10;
constexpr double kPinvThreshold = 1e-12;

}  // namespace

SldSet sld_set(const ModelPoint& pt) {
    SldSet s;
    s.dim = pt.dim();
    const int p = pt.param_count();
    s.slds.reserve(p);
    for (const HermMatrix& g : pt.grads) s.slds.push_back(anticomm_solve(pt.rho, g));

    s.qfi = RMatrix::Zero(p, p);
    s.mean_commutators = CMatrix::Zero(p, p);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            const cplx t = (pt.rho.matrix() * s.slds[i].matrix() * s.slds[j].matrix()).trace();
            // tr(rho L_i L_j) = F_ij + tr(rho [L_i, L_j]) / 2.
            s.qfi(i, j) = t.real();
            s.mean_commutators(i, j) = cplx(0.0, 2.0 * t.imag());
        }
    }
    s.qfi = 0.5 * (s.qfi + s.qfi.transpose()).eval();
    return s;
}

double sld_cr_bound(const SldSet& s, const CostMatrix& c) {
    if (c.size() != s.param_count()) {
        throw_validation("sld_cr_bound", "cost is " + std::to_string(c.size()) + "x" + std::to_string(c.size()) +
                                             " but the model has " + std::to_string(s.param_count()) + " parameters");
    }
    Eigen::SelfAdjointEigenSolver<RMatrix> es(s.qfi);
    const RVector& lam = es.eigenvalues();
    const RMatrix& u = es.eigenvectors();
    const double top = std::max(lam.cwiseAbs().maxCoeff(), 0.0);
    const double cscale = std::max(1.0, c.matrix().cwiseAbs().maxCoeff());
    double total = 0.0;
    for (Eigen::Index k = 0; k < lam.size(); ++k) {
        const double w = u.col(k).dot(c.matrix() * u.col(k));
        if (lam(k) <= kPinvThreshold * top || top == 0.0) {
            if (std::abs(w) > 1e-10 * cscale) {
                throw_validation("sld_cr_bound", "unidentifiable parameter: cost weight " + std::to_string(w) +
                                                     " on a zero direction of the QFI");
            }
            continue;
        }
        total += w / lam(k);
    }
    return total;
}

CMatrix rld_fisher(const ModelPoint& pt) {
    Spectrum sp = eig_hermitian(pt.rho);
    const double top = sp.values(sp.values.size() - 1);
    if (!(sp.values(0) > 1e-12 * top)) {
        throw_validation("rld_bound", "RLD undefined: rho is rank deficient (smallest eigenvalue " +
                                          std::to_string(sp.values(0)) + ")");
    }
    const CMatrix rho_inv = sp.vectors * sp.values.cwiseInverse().asDiagonal() * sp.vectors.adjoint();
    const int p = pt.param_count();
    CMatrix f(p, p);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) f(i, j) = (pt.grads[i].matrix() * rho_inv * pt.grads[j].matrix()).trace();
    }
    return 0.5 * (f + f.adjoint());
}

double rld_bound(const ModelPoint& pt, const CostMatrix& c) {
    if (c.size() != pt.param_count()) throw_validation("rld_bound", "cost size does not match the parameter count");
    const CMatrix f = rld_fisher(pt);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(f);
    if (!(es.eigenvalues()(0) > kPinvThreshold * es.eigenvalues().maxCoeff())) {
        throw_validation("rld_bound", "unidentifiable parameter: RLD information is singular");
    }
    const CMatrix inv = es.eigenvectors() * es.eigenvalues().cwiseInverse().asDiagonal() * es.eigenvectors().adjoint();
    const RMatrix sc = c.sqrt();
    const RMatrix im = inv.imag();
    const RMatrix re = inv.real();
    return (c.matrix() * re).trace() + trace_norm_antisymmetric(sc * (0.5 * (im - im.transpose())) * sc);
}

CompatibilityReport compatibility_report(const SldSet& s, const CostMatrix& c) {
    CompatibilityReport r;
    r.max_commutator = s.mean_commutators.size() ? s.mean_commutators.cwiseAbs().maxCoeff() : 0.0;
    r.commutators_vanish = r.max_commutator <= kCommutatorTol;
    const int rank = c.rank();
    r.cost_full_rank = rank == c.size();
    r.cost_rank_one = rank == 1;
    r.predicts_hcr_equals_sld = r.cost_rank_one || (r.commutators_vanish && r.cost_full_rank);
    return r;
}

HermMatrix apply_d(const HermMatrix& rho, const HermMatrix& x) {
    Spectrum sp = eig_hermitian(rho);
    const Eigen::Index n = rho.dim();
    CMatrix xt = sp.vectors.adjoint() * x.matrix() * sp.vectors;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double s = sp.values(i) + sp.values(j);
            xt(i, j) *= s > 0.0 ? cplx(0.0, (sp.values(j) - sp.values(i)) / s) : cplx(0.0);
        }
    }
    return HermMatrix::hermitian_part(sp.vectors * xt * sp.vectors.adjoint());
}

DInvariance d_invariance_check(const ModelPoint& pt) {
    const double lo = min_eigenvalue(pt.rho);
    if (!(lo > 1e-12)) {
        throw_validation("d_invariance_check",
                         "unsupported: rho must be full rank (smallest eigenvalue " + std::to_string(lo) + ")");
    }
    const SldSet s = sld_set(pt);
    const std::vector<HermMatrix> hb = hermitian_basis(pt.dim());
    const double rank_tol = 1e-9;

    std::vector<RVector> span;  // orthonormal coordinate vectors
    auto try_add = [&](const RVector& v) {
        RVector r = v;
        for (const RVector& e : span) r -= e.dot(r) * e;
        for (const RVector& e : span) r -= e.dot(r) * e;  // second pass for stability
        const double nr = r.norm();
        if (nr > rank_tol * std::max(1.0, v.norm())) {
            span.push_back(r / nr);
            return true;
        }
        return false;
    };

    for (const HermMatrix& l : s.slds) try_add(hermitian_coordinates(l, hb));
    DInvariance out;
    out.span_dim = static_cast<int>(span.size());

    const int cap = pt.param_count() * static_cast<int>(pt.dim() * pt.dim());
    std::size_t next = 0;
    while (next < span.size() && out.steps < cap) {
        const HermMatrix x = from_coordinates(span[next], hb);
        try_add(hermitian_coordinates(apply_d(pt.rho, x), hb));
        ++next;
        ++out.steps;
    }
    out.invariant = static_cast<int>(span.size()) == out.span_dim;
    for (const RVector& e : span) out.basis.push_back(from_coordinates(e, hb));
    return out;
}

double hgm_bound(const SldSet& s, const CostMatrix& c) {
    if (s.dim != 2) {
        throw_validation("hgm_bound", "domain error: the bound applies to qubit models only, got dimension " +
                                          std::to_string(s.dim));
    }
    if (c.size() != s.param_count()) throw_validation("hgm_bound", "cost size does not match the parameter count");
    Eigen::SelfAdjointEigenSolver<RMatrix> es(s.qfi);
    if (!(es.eigenvalues()(0) > kPinvThreshold * es.eigenvalues().maxCoeff())) {
        throw_validation("hgm_bound", "unidentifiable parameter: QFI is singular");
    }
    const RMatrix f_inv_half =
        es.eigenvectors() * es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
    const RMatrix m = f_inv_half * c.matrix() * f_inv_half;
    const double t = sqrt_psd(m).trace();
    return t * t;
}

}  // namespace holevo
