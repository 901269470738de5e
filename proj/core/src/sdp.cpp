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

#include "holevo/sdp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "holevo/error.hpp"

namespace holevo {

namespace {

// Small block-matrix algebra. Blocks are dense and symmetric.

double inner(const BlockMatrix& a, const BlockMatrix& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k].cwiseProduct(b[k]).sum();
    return s;
}

double frob(const BlockMatrix& a) { return std::sqrt(inner(a, a)); }

BlockMatrix axpy(double alpha, const BlockMatrix& x, const BlockMatrix& y) {
    BlockMatrix out(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) out[k] = alpha * x[k] + y[k];
    return out;
}

BlockMatrix scaled_identity(const std::vector<Eigen::Index>& blocks, const std::vector<double>& scale) {
    BlockMatrix out(blocks.size());
    for (std::size_t k = 0; k < blocks.size(); ++k) out[k] = scale[k] * RMatrix::Identity(blocks[k], blocks[k]);
    return out;
}

RMatrix sym(const RMatrix& m) { return 0.5 * (m + m.transpose()); }

// Largest step alpha with x + alpha dx still PSD; +inf if unbounded.
double max_step(const BlockMatrix& x, const BlockMatrix& dx) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < x.size(); ++k) {
        Eigen::LLT<RMatrix> llt(x[k]);
        RMatrix l = llt.matrixL();
        RMatrix w = l.triangularView<Eigen::Lower>().solve(dx[k]);
        w = l.triangularView<Eigen::Lower>().solve(w.transpose()).transpose();
        Eigen::SelfAdjointEigenSolver<RMatrix> es(sym(w), Eigen::EigenvaluesOnly);
        double lo = es.eigenvalues()(0);
        if (lo < 0) best = std::min(best, -1.0 / lo);
    }
    return best;
}

struct Solver {
    const SdpProblem& p;
    const SdpOptions& opts;
    const std::size_t m;
    const std::size_t nb;

    Solver(const SdpProblem& prob, const SdpOptions& o)
        : p(prob), opts(o), m(prob.constraints.size()), nb(prob.blocks.size()) {}

    RVector apply_a(const BlockMatrix& x) const {
        RVector out(m);
        for (std::size_t i = 0; i < m; ++i) out(i) = inner(p.constraints[i].a, x);
        return out;
    }

    BlockMatrix apply_at(const RVector& y) const {
        BlockMatrix out(nb);
        for (std::size_t k = 0; k < nb; ++k) {
            out[k] = RMatrix::Zero(p.blocks[k], p.blocks[k]);
            for (std::size_t i = 0; i < m; ++i) out[k] += y(i) * p.constraints[i].a[k];
        }
        return out;
    }

    RVector bvec() const {
        RVector b(m);
        for (std::size_t i = 0; i < m; ++i) b(i) = p.constraints[i].b;
        return b;
    }
};

}  // namespace

const char* status_name(SdpStatus s) {
    switch (s) {
        case SdpStatus::optimal:
            return "optimal";
        case SdpStatus::max_iter:
            return "max-iter";
        case SdpStatus::infeasible_detected:
            return "infeasible-detected";
    }
    return "unknown";
}

void SdpProblem::validate() const {
    auto check_block_matrix = [&](const BlockMatrix& a, const std::string& what) {
        if (a.size() != blocks.size()) {
            throw_validation("sdp", what + " has " + std::to_string(a.size()) + " blocks, expected " +
                                        std::to_string(blocks.size()));
        }
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            if (a[k].rows() != blocks[k] || a[k].cols() != blocks[k]) {
                throw_validation("sdp", what + " block " + std::to_string(k) + " does not match the declared size");
            }
            double scale = std::max(1.0, a[k].cwiseAbs().maxCoeff());
            if ((a[k] - a[k].transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
                throw_validation("sdp", what + " block " + std::to_string(k) + " is not symmetric");
            }
        }
    };
    if (blocks.empty()) throw_validation("sdp", "problem has no blocks");
    for (Eigen::Index b : blocks) {
        if (b < 1) throw_validation("sdp", "block sizes must be positive");
    }
    check_block_matrix(c, "C");
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        check_block_matrix(constraints[i].a, "A_" + std::to_string(i));
    }
}

SdpSolution solve(const SdpProblem& problem, const SdpOptions& opts) {
    problem.validate();
    Solver s(problem, opts);
    const std::size_t m = s.m;
    const std::size_t nb = s.nb;
    const RVector b = s.bvec();

    Eigen::Index n_total = 0;
    for (Eigen::Index k : problem.blocks) n_total += k;
    const double n = static_cast<double>(n_total);

    // Infeasible starting point: identities scaled to the data.
    std::vector<double> xi(nb), eta(nb);
    for (std::size_t k = 0; k < nb; ++k) {
        const double nk = static_cast<double>(problem.blocks[k]);
        double xs = std::max(10.0, std::sqrt(nk));
        double zs = std::max({10.0, std::sqrt(nk), problem.c[k].norm()});
        for (std::size_t i = 0; i < m; ++i) {
            const double an = problem.constraints[i].a[k].norm();
            xs = std::max(xs, nk * (1.0 + std::abs(b(i))) / (1.0 + an));
            zs = std::max(zs, an);
        }
        xi[k] = xs;
        eta[k] = zs;
    }
    BlockMatrix x = scaled_identity(problem.blocks, xi);
    BlockMatrix z = scaled_identity(problem.blocks, eta);
    RVector y = RVector::Zero(m);

    const double bnorm = b.norm();
    const double cnorm = frob(problem.c);

    SdpSolution out;
    out.status = SdpStatus::max_iter;

    for (int iter = 0; iter <= opts.max_iter; ++iter) {
        const RVector rp = b - s.apply_a(x);
        const BlockMatrix at_y = s.apply_at(y);
        BlockMatrix rd(nb);
        for (std::size_t k = 0; k < nb; ++k) rd[k] = problem.c[k] - z[k] - at_y[k];

        const double pobj = inner(problem.c, x);
        const double dobj = b.dot(y);
        const double xz = inner(x, z);
        const double pinf = rp.norm() / (1.0 + bnorm);
        const double dinf = frob(rd) / (1.0 + cnorm);

        out.x = x;
        out.y = y;
        out.z = z;
        out.primal_value = pobj;
        out.dual_value = dobj;
        out.gap = std::abs(pobj - dobj);
        out.primal_infeasibility = pinf;
        out.dual_infeasibility = dinf;
        out.complementarity = xz;
        out.iterations = iter;

        const double gap_limit = opts.gap_tol * (1.0 + std::abs(pobj));
        if (pinf <= opts.feas_tol && dinf <= opts.feas_tol && out.gap <= gap_limit && xz <= gap_limit) {
            out.status = SdpStatus::optimal;
            return out;
        }
        if (iter == opts.max_iter) break;

        // Heuristic divergence check: iterates blowing up signal infeasibility.
        double xmax = 0.0;
        for (const RMatrix& xk : x) xmax = std::max(xmax, xk.cwiseAbs().maxCoeff());
        if (xmax > 1e14 * (1.0 + bnorm) || y.cwiseAbs().maxCoeff() > 1e14 * (1.0 + cnorm)) {
            out.status = SdpStatus::infeasible_detected;
            return out;
        }

        const double mu = xz / n;
        BlockMatrix zinv(nb);
        for (std::size_t k = 0; k < nb; ++k) {
            Eigen::LLT<RMatrix> llt(z[k]);
            if (llt.info() != Eigen::Success) return out;
            zinv[k] = llt.solve(RMatrix::Identity(problem.blocks[k], problem.blocks[k]));
            zinv[k] = sym(zinv[k]);
        }

        // Schur complement M_ij = tr(A_i X A_j Z^{-1}).
        std::vector<BlockMatrix> xaz(m, BlockMatrix(nb));
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < nb; ++k) xaz[j][k] = x[k] * problem.constraints[j].a[k] * zinv[k];
        }
        RMatrix schur(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                double v = inner(problem.constraints[i].a, xaz[j]);
                schur(i, j) = v;
                schur(j, i) = v;
            }
        }
        Eigen::LLT<RMatrix> schur_llt(schur);
        Eigen::LDLT<RMatrix> schur_ldlt;
        const bool use_llt = schur_llt.info() == Eigen::Success;
        if (!use_llt) schur_ldlt.compute(schur);
        auto solve_schur = [&](const RVector& r) -> RVector {
            return use_llt ? RVector(schur_llt.solve(r)) : RVector(schur_ldlt.solve(r));
        };

        BlockMatrix x_rd_zinv(nb);
        for (std::size_t k = 0; k < nb; ++k) x_rd_zinv[k] = x[k] * rd[k] * zinv[k];
        const RVector a_x_rd_zinv = s.apply_a(x_rd_zinv);

        // Direction for target sigma*mu with second-order correction `corr`.
        auto direction = [&](double sigma, const BlockMatrix* corr, BlockMatrix& dx, RVector& dy, BlockMatrix& dz) {
            BlockMatrix g(nb);
            for (std::size_t k = 0; k < nb; ++k) {
                RMatrix t = sigma * mu * RMatrix::Identity(problem.blocks[k], problem.blocks[k]);
                if (corr) t -= (*corr)[k];
                g[k] = t * zinv[k] - x[k];
            }
            dy = solve_schur(rp - s.apply_a(g) + a_x_rd_zinv);
            const BlockMatrix at_dy = s.apply_at(dy);
            dz.resize(nb);
            dx.resize(nb);
            for (std::size_t k = 0; k < nb; ++k) {
                dz[k] = rd[k] - at_dy[k];
                dx[k] = sym(g[k] - x[k] * dz[k] * zinv[k]);
            }
        };

        BlockMatrix dx_p, dz_p;
        RVector dy_p;
        direction(0.0, nullptr, dx_p, dy_p, dz_p);
        const double ap = std::min(1.0, max_step(x, dx_p));
        const double ad = std::min(1.0, max_step(z, dz_p));
        const double xz_pred = inner(axpy(ap, dx_p, x), axpy(ad, dz_p, z));
        const double expo = std::max(1.0, 3.0 * std::min(ap, ad) * std::min(ap, ad));
        const double sigma = std::clamp(std::pow(std::max(xz_pred, 0.0) / xz, expo), 0.0, 1.0);

        BlockMatrix corr(nb);
        for (std::size_t k = 0; k < nb; ++k) corr[k] = dx_p[k] * dz_p[k];
        BlockMatrix dx, dz;
        RVector dy;
        direction(sigma, &corr, dx, dy, dz);

        const double tau = 0.98;
        const double step_p = std::min(1.0, tau * max_step(x, dx));
        const double step_d = std::min(1.0, tau * max_step(z, dz));
        x = axpy(step_p, dx, x);
        z = axpy(step_d, dz, z);
        y += step_d * dy;
        for (std::size_t k = 0; k < nb; ++k) {
            x[k] = sym(x[k]);
            z[k] = sym(z[k]);
        }
    }
    return out;
}

RMatrix complex_psd_embed(const CMatrix& h) {
    const Eigen::Index n = h.rows();
    RMatrix out(2 * n, 2 * n);
    const RMatrix re = h.real();
    const RMatrix im = h.imag();
    out.topLeftCorner(n, n) = re;
    out.topRightCorner(n, n) = -im;
    out.bottomLeftCorner(n, n) = im;
    out.bottomRightCorner(n, n) = re;
    return out;
}

void write_problem(std::ostream& os, const SdpProblem& problem) {
    const Eigen::IOFormat plain(Eigen::FullPrecision, Eigen::DontAlignCols, " ", "\n");
    os << "blocks";
    for (Eigen::Index b : problem.blocks) os << ' ' << b;
    os << "\nconstraints " << problem.constraints.size() << "\nC\n";
    for (const RMatrix& c : problem.c) os << c.format(plain) << "\n";
    for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
        os << "A " << i << " b " << problem.constraints[i].b << "\n";
        for (const RMatrix& a : problem.constraints[i].a) os << a.format(plain) << "\n";
    }
}

}  // namespace holevo
