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

#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace holevo::oracle {

RMatrix random_real(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    std::normal_distribution<double> g;
    RMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = g(rng);
    return m;
}

CMatrix random_complex(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    const RMatrix re = random_real(rows, cols, rng);
    const RMatrix im = random_real(rows, cols, rng);
    return re.cast<cplx>() + cplx(0.0, 1.0) * im.cast<cplx>();
}

CMatrix random_unitary(Eigen::Index d, Rng& rng) {
    Eigen::HouseholderQR<CMatrix> qr(random_complex(d, d, rng));
    CMatrix q = qr.householderQ();
    // Fix the phases so the distribution is Haar.
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < d; ++k) {
        const double a = std::abs(r(k, k));
        if (a > 0.0) q.col(k) *= r(k, k) / a;
    }
    return q;
}

HermMatrix random_density(Eigen::Index d, Rng& rng, double floor) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    RVector lam(d);
    for (Eigen::Index k = 0; k < d; ++k) lam(k) = -std::log(1.0 - u(rng));
    lam /= lam.sum();
    lam = (1.0 - d * floor) * lam + RVector::Constant(d, floor);
    const CMatrix v = random_unitary(d, rng);
    return HermMatrix::hermitian_part(v * lam.cast<cplx>().asDiagonal() * v.adjoint());
}

HermMatrix random_traceless(Eigen::Index d, Rng& rng) {
    const CMatrix g = random_complex(d, d, rng);
    CMatrix h = 0.5 * (g + g.adjoint());
    h -= (h.trace() / static_cast<double>(d)) * CMatrix::Identity(d, d);
    h /= h.norm();
    return HermMatrix::hermitian_part(h);
}

ModelPoint random_model_point(Eigen::Index d, int p, Rng& rng) {
    HermMatrix rho = random_density(d, rng);
    std::vector<HermMatrix> grads;
    for (int k = 0; k < p; ++k) grads.push_back(random_traceless(d, rng));
    return ModelPoint::make(rho, grads, RVector::Zero(p));
}

RMatrix random_psd(Eigen::Index p, Rng& rng, double floor) {
    const RMatrix g = random_real(p, p, rng);
    return g * g.transpose() / static_cast<double>(p) + floor * RMatrix::Identity(p, p);
}

CMatrix tensor_power(const CMatrix& m, int n) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int k = 0; k < n; ++k) {
        CMatrix next(out.rows() * m.rows(), out.cols() * m.cols());
        for (Eigen::Index i = 0; i < out.rows(); ++i)
            for (Eigen::Index j = 0; j < out.cols(); ++j)
                next.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) = out(i, j) * m;
        out = std::move(next);
    }
    return out;
}

namespace {

CMatrix embed(const CMatrix& op, int site, int n) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int k = 0; k < n; ++k) {
        const CMatrix f = k == site ? op : CMatrix::Identity(2, 2);
        CMatrix next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index i = 0; i < out.rows(); ++i)
            for (Eigen::Index j = 0; j < out.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = out(i, j) * f;
        out = std::move(next);
    }
    return out;
}

}  // namespace

DenseSpin dense_total_spin(int n) {
    CMatrix sx(2, 2), sy(2, 2), sz(2, 2);
    const cplx i(0.0, 1.0);
    sx << 0.0, 1.0, 1.0, 0.0;
    sy << 0.0, -i, i, 0.0;
    sz << 1.0, 0.0, 0.0, -1.0;
    const Eigen::Index dim = Eigen::Index{1} << n;
    DenseSpin s{CMatrix::Zero(dim, dim), CMatrix::Zero(dim, dim), CMatrix::Zero(dim, dim), CMatrix()};
    for (int k = 0; k < n; ++k) {
        s.jx += 0.5 * embed(sx, k, n);
        s.jy += 0.5 * embed(sy, k, n);
        s.jz += 0.5 * embed(sz, k, n);
    }
    s.j2 = s.jx * s.jx + s.jy * s.jy + s.jz * s.jz;
    return s;
}

CMatrix j2_projector(const DenseSpin& s, int two_j) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(s.j2);
    const double target = 0.25 * two_j * (two_j + 2);
    CMatrix p = CMatrix::Zero(s.j2.rows(), s.j2.cols());
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        if (std::abs(es.eigenvalues()(k) - target) < 1e-6) {
            p += es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
        }
    }
    return p;
}

DenseSpin spin_j_operators(int two_j) {
    const Eigen::Index d = two_j + 1;
    const double j = 0.5 * two_j;
    CMatrix jp = CMatrix::Zero(d, d);
    CMatrix jz = CMatrix::Zero(d, d);
    for (Eigen::Index a = 0; a < d; ++a) {
        const double m = j - static_cast<double>(a);
        jz(a, a) = m;
        // <m + 1| J+ |m> sits one row above.
        if (a > 0) jp(a - 1, a) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
    const CMatrix jm = jp.adjoint();
    const cplx i(0.0, 1.0);
    DenseSpin s{0.5 * (jp + jm), -0.5 * i * (jp - jm), jz, CMatrix()};
    s.j2 = s.jx * s.jx + s.jy * s.jy + s.jz * s.jz;
    return s;
}

GaussianShiftModel random_gaussian_model(int q_modes, int c_vars, bool pure, Rng& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> squeeze(-0.8, 0.8);
    const int r = 2 * q_modes + c_vars;
    RMatrix v = RMatrix::Zero(r, r);
    for (int k = 0; k < q_modes; ++k) {
        auto rot = [](double a) {
            RMatrix m(2, 2);
            m << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
            return m;
        };
        const double s = std::exp(squeeze(rng));
        const RMatrix sym = rot(angle(rng)) * Eigen::Vector2d(s, 1.0 / s).asDiagonal() * rot(angle(rng));
        v.block(2 * k, 2 * k, 2, 2) = 0.5 * sym * sym.transpose();
    }
    if (c_vars > 0) v.bottomRightCorner(c_vars, c_vars) = random_psd(c_vars, rng, 0.1);
    if (!pure) {
        const RMatrix w = random_real(r, r, rng);
        v += 0.3 * w * w.transpose() / static_cast<double>(r);
    }
    RMatrix a = random_real(r, r, rng);
    while (std::abs(a.determinant()) < 0.1) a = random_real(r, r, rng);
    return GaussianShiftModel(q_modes, c_vars, a, v);
}

double block_inner(const BlockMatrix& a, const BlockMatrix& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k].cwiseProduct(b[k]).sum();
    return s;
}

double block_min_eig(const BlockMatrix& a) {
    double lo = INFINITY;
    for (const RMatrix& m : a) {
        Eigen::SelfAdjointEigenSolver<RMatrix> es(m, Eigen::EigenvaluesOnly);
        lo = std::min(lo, es.eigenvalues().minCoeff());
    }
    return lo;
}

PlantedSdp random_planted_sdp(Rng& rng) {
    std::uniform_int_distribution<int> nblocks(1, 3);
    std::uniform_int_distribution<int> bsize(1, 5);
    PlantedSdp out;
    SdpProblem& pr = out.problem;
    const int nb = nblocks(rng);
    Eigen::Index svec = 0;
    for (int k = 0; k < nb; ++k) {
        const Eigen::Index n = bsize(rng);
        pr.blocks.push_back(n);
        svec += n * (n + 1) / 2;
    }
    std::uniform_int_distribution<Eigen::Index> mcount(1, std::max<Eigen::Index>(1, svec - 1));
    const Eigen::Index m = mcount(rng);

    auto sym = [&](Eigen::Index n) {
        const RMatrix g = random_real(n, n, rng);
        return RMatrix(0.5 * (g + g.transpose()));
    };
    auto pd = [&](Eigen::Index n) { return RMatrix(random_psd(n, rng, 0.1)); };

    for (Eigen::Index n : pr.blocks) out.x0.push_back(pd(n));
    out.y0 = random_real(m, 1, rng);
    BlockMatrix z0;
    for (Eigen::Index n : pr.blocks) z0.push_back(pd(n));

    for (Eigen::Index i = 0; i < m; ++i) {
        SdpConstraint c;
        for (Eigen::Index n : pr.blocks) c.a.push_back(sym(n));
        c.b = block_inner(c.a, out.x0);
        pr.constraints.push_back(std::move(c));
    }
    pr.c = z0;
    for (Eigen::Index i = 0; i < m; ++i)
        for (std::size_t k = 0; k < pr.c.size(); ++k) pr.c[k] += out.y0(i) * pr.constraints[i].a[k];
    out.upper = block_inner(pr.c, out.x0);
    out.lower = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) out.lower += out.y0(i) * pr.constraints[i].b;
    return out;
}

CMatrix five_point_derivative(const ParametricModel& m, const RVector& theta, int k, double h) {
    auto at = [&](double s) {
        RVector t = theta;
        t(k) += s;
        return m.state_fn()(t);
    };
    return (-at(2 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2 * h)) / (12.0 * h);
}

}  // namespace holevo::oracle
