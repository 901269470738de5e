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

#include "holevo/sim.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <string>
#include <thread>

#include "holevo/bounds.hpp"
#include "holevo/error.hpp"
#include "holevo/rng.hpp"
#include "holevo/spin.hpp"

namespace holevo {

namespace {

constexpr double kZeroProb = 1e-12;

struct BlochData {
    Eigen::Vector3d r;
    RMatrix jac;  // 3 x p, d r / d theta
};

BlochData bloch_data(const char* where, const ModelPoint& pt) {
    if (pt.dim() != 2) throw_validation(where, "qubit model required, got dimension " + std::to_string(pt.dim()));
    BlochData out;
    out.jac.resize(3, pt.param_count());
    for (int k = 0; k < 3; ++k) {
        const CMatrix s = pauli(k + 1).matrix();
        out.r(k) = (pt.rho.matrix() * s).trace().real();
        for (int i = 0; i < pt.param_count(); ++i) out.jac(k, i) = (pt.grads[i].matrix() * s).trace().real();
    }
    return out;
}

// Rank-one information direction of a projective measurement along `axis`,
// or the zero vector when the outcome distribution is locally constant.
RVector axis_direction(const char* where, const BlochData& b, const Eigen::Vector3d& axis) {
    const Eigen::Vector3d n = axis.normalized();
    const double nr = n.dot(b.r);
    const RVector g = b.jac.transpose() * n;
    const double denom = 1.0 - nr * nr;
    if (denom < kZeroProb) {
        if (g.norm() > 1e-7)
            throw_validation(where,
                             "singular model: an outcome with zero probability has a "
                             "non-zero derivative");
        return RVector::Zero(g.size());
    }
    return g / std::sqrt(denom);
}

double cost_of(const RMatrix& f, const CostMatrix& c) {
    Eigen::SelfAdjointEigenSolver<RMatrix> es(f);
    const double top = es.eigenvalues().cwiseAbs().maxCoeff();
    if (!(es.eigenvalues()(0) > 1e-12 * std::max(top, 1e-300))) return std::numeric_limits<double>::infinity();
    return (c.matrix() * f.inverse()).trace();
}

}  // namespace

void Povm::validate() const {
    const char* where = "Povm";
    if (elements.empty()) throw_validation(where, "no elements");
    if (!labels.empty() && labels.size() != elements.size()) throw_validation(where, "label count mismatch");
    const Eigen::Index d = elements.front().dim();
    CMatrix sum = CMatrix::Zero(d, d);
    for (std::size_t k = 0; k < elements.size(); ++k) {
        if (elements[k].dim() != d) throw_validation(where, "elements have different dimensions");
        if (min_eigenvalue(elements[k]) < -1e-10) {
            throw_validation(where, "element " + std::to_string(k) + " is not positive semidefinite");
        }
        sum += elements[k].matrix();
    }
    const double err = (sum - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (err > 1e-9) throw_validation(where, "elements do not sum to the identity (error " + std::to_string(err) + ")");
}

Povm projective_povm(const CMatrix& basis) {
    Povm p;
    for (Eigen::Index k = 0; k < basis.cols(); ++k) {
        p.elements.push_back(HermMatrix::hermitian_part(basis.col(k) * basis.col(k).adjoint()));
        p.labels.push_back(std::to_string(k));
    }
    p.validate();
    return p;
}

Povm pauli_povm(const RVector& weights) {
    if (weights.size() != 3) throw_validation("pauli_povm", "need three weights");
    if ((weights.array() < 0.0).any() || std::abs(weights.sum() - 1.0) > 1e-12) {
        throw_validation("pauli_povm", "weights must be a probability vector");
    }
    Povm p;
    const char* names[] = {"x", "y", "z"};
    for (int k = 0; k < 3; ++k) {
        if (weights(k) == 0.0) continue;
        for (int sign : {1, -1}) {
            const HermMatrix e =
                0.5 * weights(k) * (HermMatrix::identity(2) + static_cast<double>(sign) * pauli(k + 1));
            p.elements.push_back(e);
            p.labels.push_back(std::string(sign > 0 ? "+" : "-") + names[k]);
        }
    }
    p.validate();
    return p;
}

RMatrix classical_fisher(const Povm& povm, const ModelPoint& pt, std::vector<std::string>* warnings) {
    const char* where = "classical_fisher";
    povm.validate();
    if (povm.dim() != pt.dim()) throw_validation(where, "POVM and state dimensions differ");
    const int p = pt.param_count();
    RMatrix f = RMatrix::Zero(p, p);
    for (std::size_t k = 0; k < povm.elements.size(); ++k) {
        const CMatrix& m = povm.elements[k].matrix();
        const double prob = (pt.rho.matrix() * m).trace().real();
        RVector dp(p);
        for (int i = 0; i < p; ++i) dp(i) = (pt.grads[i].matrix() * m).trace().real();
        if (prob < kZeroProb) {
            if (dp.norm() > 1e-9) {
                throw_validation(where, "singular model: outcome " + std::to_string(k) +
                                            " has zero probability but a non-zero derivative");
            }
            if (warnings) warnings->push_back("dropped zero-probability outcome " + std::to_string(k));
            continue;
        }
        f += dp * dp.transpose() / prob;
    }
    return 0.5 * (f + f.transpose());
}

LocalStrategy local_strategy(const ModelPoint& pt, const CostMatrix& c, const RMatrix& axes, const RVector& weights) {
    const char* where = "local_strategy";
    const BlochData b = bloch_data(where, pt);
    if (axes.rows() != 3 || axes.cols() != weights.size()) throw_validation(where, "axes and weights disagree");
    if (c.size() != pt.param_count()) throw_validation(where, "cost size does not match the parameter count");
    LocalStrategy out;
    out.axes = axes;
    out.weights = weights;
    out.fisher = RMatrix::Zero(pt.param_count(), pt.param_count());
    for (Eigen::Index a = 0; a < axes.cols(); ++a) {
        const RVector h = axis_direction(where, b, axes.col(a));
        out.fisher += weights(a) * h * h.transpose();
    }
    out.cost = cost_of(out.fisher, c);
    return out;
}

LocalStrategy weighted_local_strategy(const ModelPoint& pt, const CostMatrix& c, const RMatrix& axes) {
    const char* where = "weighted_local_strategy";
    const BlochData b = bloch_data(where, pt);
    const int p = pt.param_count();
    if (c.size() != p) throw_validation(where, "cost size does not match the parameter count");
    const Eigen::Index k = axes.cols();
    RMatrix h(p, k);
    std::vector<Eigen::Index> live;
    for (Eigen::Index a = 0; a < k; ++a) {
        h.col(a) = axis_direction(where, b, axes.col(a));
        if (h.col(a).norm() > 1e-12) live.push_back(a);
    }
    RVector w = RVector::Zero(k);

    if (static_cast<int>(live.size()) == p) {
        RMatrix hs(p, p);
        for (int i = 0; i < p; ++i) hs.col(i) = h.col(live[i]);
        Eigen::FullPivLU<RMatrix> lu(hs);
        if (lu.isInvertible()) {
            const RMatrix hinv = lu.inverse();
            const RVector a = (hinv * c.matrix() * hinv.transpose()).diagonal().cwiseMax(0.0);
            const RVector s = a.cwiseSqrt();
            for (int i = 0; i < p; ++i) w(live[i]) = s(i) / s.sum();
            LocalStrategy out = local_strategy(pt, c, axes, w);
            out.cost = s.sum() * s.sum();
            return out;
        }
    }
    if (live.empty()) return local_strategy(pt, c, axes, RVector::Constant(k, 1.0 / static_cast<double>(k)));

    // Multiplicative updates for the A-optimal design; the fixed point has
    // equal h_a^T F^{-1} C F^{-1} h_a on the support.
    for (Eigen::Index a : live) w(a) = 1.0 / static_cast<double>(live.size());
    RMatrix f = h * w.asDiagonal() * h.transpose();
    if (!std::isfinite(cost_of(f, c))) return local_strategy(pt, c, axes, w);
    for (int it = 0; it < 20000; ++it) {
        const RMatrix finv = f.inverse();
        const RMatrix g = finv * c.matrix() * finv;
        RVector next = RVector::Zero(k);
        double spread = 0.0;
        const double target = (c.matrix() * finv).trace();
        for (Eigen::Index a : live) {
            const double s = h.col(a).dot(g * h.col(a));
            next(a) = w(a) * std::sqrt(std::max(s, 0.0));
            if (w(a) > 1e-9) spread = std::max(spread, std::abs(s - target) / target);
        }
        w = next / next.sum();
        f = h * w.asDiagonal() * h.transpose();
        if (spread < 1e-12) break;
    }
    return local_strategy(pt, c, axes, w);
}

RMatrix optimal_local_axes(const ModelPoint& pt, const CostMatrix& c) {
    const char* where = "optimal_local_axes";
    const BlochData b = bloch_data(where, pt);
    const int p = pt.param_count();
    if (c.size() != p) throw_validation(where, "cost size does not match the parameter count");
    const RMatrix fq = sld_set(pt).qfi;
    Eigen::SelfAdjointEigenSolver<RMatrix> fes(fq);
    if (!(fes.eigenvalues()(0) > 1e-12 * fes.eigenvalues().maxCoeff())) {
        throw_validation(where, "quantum Fisher information is singular");
    }
    const RMatrix f_half =
        fes.eigenvectors() * fes.eigenvalues().cwiseSqrt().asDiagonal() * fes.eigenvectors().transpose();
    const RMatrix f_mhalf = f_half.inverse();
    Eigen::SelfAdjointEigenSolver<RMatrix> ces(f_mhalf * c.matrix() * f_mhalf);

    // Q J, with Q the Bloch-space information metric I + r r^T / (1 - r^2).
    const double purity_gap = 1.0 - b.r.squaredNorm();
    const RVector rj = b.jac.transpose() * b.r;
    RMatrix qj = b.jac;
    if (purity_gap > kZeroProb) {
        qj += b.r * rj.transpose() / purity_gap;
    } else if (rj.norm() > 1e-7) {
        throw_validation(where, "pure state with a derivative that changes the purity");
    }
    const RMatrix finv = fq.inverse();
    RMatrix axes(3, p);
    for (int k = 0; k < p; ++k) {
        const RVector m = qj * finv * (f_half * ces.eigenvectors().col(k));
        axes.col(k) = m.normalized();
    }
    return axes;
}

std::vector<long long> sample_povm(const HermMatrix& rho, const Povm& povm, long long trials, std::uint64_t seed) {
    povm.validate();
    if (rho.dim() != povm.dim()) throw_validation("sample_povm", "state and POVM dimensions differ");
    if (trials < 0) throw_validation("sample_povm", "trial count must be non-negative");
    const std::size_t m = povm.elements.size();
    std::vector<double> cdf(m);
    double acc = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        acc += std::max(0.0, (rho.matrix() * povm.elements[k].matrix()).trace().real());
        cdf[k] = acc;
    }
    for (double& x : cdf) x /= acc;
    std::vector<long long> counts(m, 0);
    Philox gen(seed, 0);
    for (long long t = 0; t < trials; ++t) {
        const double u = gen.uniform();
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), m - 1);
        ++counts[idx];
    }
    return counts;
}

int worker_count() {
    if (const char* env = std::getenv("HOLEVO_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

struct BlockTables {
    std::vector<double> cdf;
    std::vector<double> score;  // d_theta log q_k
};

std::size_t draw(const std::vector<double>& cdf, double u) {
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
}

}  // namespace

CollectiveRunResult collective_estimation_run(const CollectiveRunConfig& cfg) {
    const char* where = "collective_estimation_run";
    if (cfg.trials < 1000) throw_validation(where, "at least 1000 trials are required");
    if (!(cfg.r > 0.0 && cfg.r < 1.0)) throw_validation(where, "Bloch length must lie in (0, 1)");
    if (!(cfg.c_r >= 0.0)) throw_validation(where, "cost weight must be non-negative");
    const std::vector<SpinBlockState> blocks = spin_blocks(cfg.n, cfg.r, cfg.theta);

    std::vector<double> j_cdf;
    std::vector<double> r_score;
    std::vector<BlockTables> tables;
    double acc = 0.0;
    double fisher_r = 0.0;
    double fisher_theta = 0.0;
    for (const SpinBlockState& b : blocks) {
        acc += b.weight;
        j_cdf.push_back(acc);
        const double s = spin_log_weight_derivative(cfg.n, b.two_j, cfg.r);
        r_score.push_back(s);
        fisher_r += b.weight * s * s;

        const SpinOperators ops = spin_operators(b.two_j);
        const Spectrum jx = eig_hermitian(HermMatrix::hermitian_part(ops.jx));
        const CMatrix drho = cplx(0.0, -1.0) * (ops.jy * b.block.matrix() - b.block.matrix() * ops.jy);
        BlockTables t;
        double qacc = 0.0;
        double fj = 0.0;
        for (Eigen::Index k = 0; k < jx.vectors.cols(); ++k) {
            const CVector v = jx.vectors.col(k);
            const double q = std::max(0.0, (v.adjoint() * b.block.matrix() * v)(0, 0).real());
            const double dq = (v.adjoint() * drho * v)(0, 0).real();
            qacc += q;
            t.cdf.push_back(qacc);
            const double sc = q > kZeroProb ? dq / q : 0.0;
            t.score.push_back(sc);
            fj += q * sc * sc;
        }
        for (double& x : t.cdf) x /= qacc;
        fisher_theta += b.weight * fj;
        tables.push_back(std::move(t));
    }
    for (double& x : j_cdf) x /= acc;
    if (!(fisher_theta > 1e-12)) throw_validation(where, "theta carries no information in this measurement");
    if (cfg.estimator == RadiusEstimator::locally_unbiased && !(fisher_r > 1e-12)) {
        throw_validation(where, "the total spin carries no information on r at n = " + std::to_string(cfg.n) +
                                    ", the locally unbiased radius estimator is undefined");
    }

    std::vector<double> loss(static_cast<std::size_t>(cfg.trials));
    auto run = [&](long long begin, long long end) {
        for (long long t = begin; t < end; ++t) {
            Philox gen(cfg.seed, static_cast<std::uint64_t>(t));
            const std::size_t jb = draw(j_cdf, gen.uniform());
            const std::size_t k = draw(tables[jb].cdf, gen.uniform());
            double r_hat;
            if (cfg.estimator == RadiusEstimator::locally_unbiased) {
                r_hat = cfg.r + r_score[jb] / fisher_r;
            } else {
                r_hat = std::clamp(static_cast<double>(blocks[jb].two_j) / cfg.n, 0.0, 1.0);
            }
            const double th_hat = cfg.theta + tables[jb].score[k] / fisher_theta;
            const double dr = r_hat - cfg.r;
            const double dt = th_hat - cfg.theta;
            loss[static_cast<std::size_t>(t)] = cfg.c_r * dr * dr + cfg.r * cfg.r * dt * dt;
        }
    };
    const int workers =
        std::max(1, std::min<int>(cfg.threads > 0 ? cfg.threads : worker_count(), static_cast<int>(cfg.trials / 1000)));
    if (workers == 1) {
        run(0, cfg.trials);
    } else {
        std::vector<std::thread> pool;
        const long long chunk = (cfg.trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long long b = w * chunk;
            const long long e = std::min(cfg.trials, b + chunk);
            if (b < e) pool.emplace_back(run, b, e);
        }
        for (std::thread& t : pool) t.join();
    }

    // Fixed summation order keeps the result independent of the thread count.
    double sum = 0.0;
    for (double x : loss) sum += x;
    const double mean = sum / static_cast<double>(cfg.trials);
    double sq = 0.0;
    for (double x : loss) sq += (x - mean) * (x - mean);
    const double var = sq / static_cast<double>(cfg.trials - 1);

    CollectiveRunResult out;
    out.n_cost = cfg.n * mean;
    out.n_stderr = cfg.n * std::sqrt(var / static_cast<double>(cfg.trials));
    out.fisher_r = fisher_r;
    out.fisher_theta = fisher_theta;
    out.expected = cfg.n * ((fisher_r > 0.0 ? cfg.c_r / fisher_r : std::numeric_limits<double>::infinity()) +
                            cfg.r * cfg.r / fisher_theta);
    return out;
}

void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
    os << "n,r,bound_name,value,stderr\n";
    const auto old = os.precision(17);
    for (const CurveRow& row : rows) {
        os << row.n << ',' << row.r << ',' << row.bound_name << ',' << row.value << ',' << row.stderr_value << '\n';
    }
    os.precision(old);
}

}  // namespace holevo
