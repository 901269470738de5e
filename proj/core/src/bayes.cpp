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

#include "holevo/bayes.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "holevo/bounds.hpp"
#include "holevo/error.hpp"
#include "holevo/quadrature.hpp"
#include "holevo/spin.hpp"

namespace holevo {

namespace {

constexpr double kPriorNormTol = 1e-6;
constexpr Eigen::Index kMaxPriorNodes = 2000000;

struct Averages {
    HermMatrix rho_bar;
    std::vector<HermMatrix> rho_bar_prime;
};

Averages average_states(const ParametricModel& m, const Prior& prior, const RVector& mean) {
    const Eigen::Index d = m.dim();
    const int p = m.param_count();
    CMatrix bar = CMatrix::Zero(d, d);
    std::vector<CMatrix> prime(p, CMatrix::Zero(d, d));
    for (Eigen::Index k = 0; k < prior.size(); ++k) {
        const double mass = prior.weights(k) * prior.density(k);
        if (mass == 0.0) continue;
        const CMatrix rho = m.state(prior.nodes[k]).matrix();
        bar += mass * rho;
        for (int i = 0; i < p; ++i) prime[i] += (mass * (prior.nodes[k](i) - mean(i))) * rho;
    }
    Averages out;
    out.rho_bar = HermMatrix::hermitian_part(bar);
    for (const CMatrix& x : prime) out.rho_bar_prime.push_back(HermMatrix::hermitian_part(x));
    return out;
}

// Seed operators for each parameter, after checking the averaged derivative
// has no weight where the averaged state vanishes.
std::vector<HermMatrix> seeds(const char* where, const Averages& avg) {
    const Spectrum sp = eig_hermitian(avg.rho_bar);
    const double top = sp.values.maxCoeff();
    std::vector<Eigen::Index> kernel;
    for (Eigen::Index k = 0; k < sp.values.size(); ++k) {
        if (sp.values(k) <= 1e-10 * top) kernel.push_back(k);
    }
    std::vector<HermMatrix> out;
    for (const HermMatrix& dp : avg.rho_bar_prime) {
        const CMatrix rot = sp.vectors.adjoint() * dp.matrix() * sp.vectors;
        for (Eigen::Index a : kernel) {
            for (Eigen::Index b : kernel) {
                if (std::abs(rot(a, b)) > 1e-9 * std::max(1.0, max_abs(dp.matrix()))) {
                    throw_validation(where,
                                     "averaged derivative has weight outside the support of the averaged "
                                     "state");
                }
            }
        }
        out.push_back(anticomm_solve(avg.rho_bar, dp));
    }
    return out;
}

void check_model_prior(const char* where, const ParametricModel& m, const Prior& prior) {
    prior.validate();
    if (prior.param_count() != m.param_count()) {
        throw_validation(where, "prior has " + std::to_string(prior.param_count()) + " parameters but the model has " +
                                    std::to_string(m.param_count()));
    }
}

Prior tensor_prior(const std::vector<QuadratureRule>& axes,
                   const std::function<void(const RVector& u, RVector& theta, double& density, RVector& grad)>& map,
                   double jacobian) {
    Eigen::Index total = 1;
    for (const QuadratureRule& q : axes) total *= q.size();
    if (total > kMaxPriorNodes) throw_validation("prior", "tensor grid has too many nodes");
    const int p = static_cast<int>(axes.size());
    Prior out;
    out.weights.resize(total);
    out.density.resize(total);
    std::vector<Eigen::Index> idx(p, 0);
    RVector u(p);
    for (Eigen::Index k = 0; k < total; ++k) {
        double w = jacobian;
        for (int a = 0; a < p; ++a) {
            u(a) = axes[a].nodes(idx[a]);
            w *= axes[a].weights(idx[a]);
        }
        RVector theta(p);
        RVector grad(p);
        double dens = 0.0;
        map(u, theta, dens, grad);
        out.nodes.push_back(theta);
        out.gradient.push_back(grad);
        out.weights(k) = w;
        out.density(k) = dens;
        for (int a = p - 1; a >= 0; --a) {
            if (++idx[a] < axes[a].size()) break;
            idx[a] = 0;
        }
    }
    return out;
}

}  // namespace

void Prior::validate() const {
    const char* where = "Prior";
    if (nodes.empty()) throw_validation(where, "no nodes");
    const Eigen::Index n = size();
    if (weights.size() != n || density.size() != n) throw_validation(where, "weights and density must match nodes");
    if (!gradient.empty() && static_cast<Eigen::Index>(gradient.size()) != n) {
        throw_validation(where, "gradient must be empty or match nodes");
    }
    const int p = param_count();
    for (const RVector& x : nodes) {
        if (x.size() != p) throw_validation(where, "nodes have inconsistent dimension");
    }
    if ((density.array() < 0.0).any() || (weights.array() < 0.0).any()) {
        throw_validation(where, "negative weight or density");
    }
    const double mass = weights.dot(density);
    if (std::abs(mass - 1.0) > kPriorNormTol) {
        throw_validation(where, "prior integrates to " + std::to_string(mass) + ", not 1");
    }
}

RVector Prior::mean() const {
    RVector mu = RVector::Zero(param_count());
    for (Eigen::Index k = 0; k < size(); ++k) mu += weights(k) * density(k) * nodes[k];
    return mu;
}

RMatrix Prior::covariance() const {
    const RVector mu = mean();
    RMatrix cov = RMatrix::Zero(param_count(), param_count());
    for (Eigen::Index k = 0; k < size(); ++k) {
        const RVector dx = nodes[k] - mu;
        cov += weights(k) * density(k) * dx * dx.transpose();
    }
    return cov;
}

Prior discrete_prior(const std::vector<RVector>& points, const RVector& probabilities) {
    Prior out;
    out.name = "discrete";
    out.nodes = points;
    out.weights = probabilities;
    out.density = RVector::Ones(probabilities.size());
    out.validate();
    return out;
}

Prior gaussian_prior(const RVector& mean, const RMatrix& cov, int nodes_per_axis, double width) {
    const int p = static_cast<int>(mean.size());
    if (p < 1 || cov.rows() != p || cov.cols() != p) throw_validation("gaussian_prior", "mean and covariance disagree");
    Eigen::SelfAdjointEigenSolver<RMatrix> es(0.5 * (cov + cov.transpose()));
    if (!(es.eigenvalues()(0) > 0.0)) throw_validation("gaussian_prior", "covariance must be positive definite");
    const RVector sd = es.eigenvalues().cwiseSqrt();
    const RMatrix u = es.eigenvectors();
    const RMatrix cov_inv = u * es.eigenvalues().cwiseInverse().asDiagonal() * u.transpose();
    std::vector<QuadratureRule> axes(p, gauss_legendre(nodes_per_axis, -width, width));
    const double norm = std::pow(2.0 * std::numbers::pi, -0.5 * p) / sd.prod();
    Prior out = tensor_prior(
        axes,
        [&](const RVector& z, RVector& theta, double& dens, RVector& grad) {
            theta = mean + u * sd.cwiseProduct(z);
            dens = norm * std::exp(-0.5 * z.squaredNorm());
            grad = -dens * (cov_inv * (theta - mean));
        },
        sd.prod());
    out.name = "gaussian";
    out.boundary_vanishing = true;
    out.validate();
    return out;
}

Prior uniform_prior(double a, double b, int nodes) {
    const QuadratureRule q = gauss_legendre(nodes, a, b);
    Prior out = tensor_prior(
        {q},
        [&](const RVector& z, RVector& theta, double& dens, RVector& grad) {
            theta = z;
            dens = 1.0 / (b - a);
            grad = RVector::Zero(1);
        },
        1.0);
    out.name = "uniform";
    out.validate();
    return out;
}

Prior cosine_squared_prior(double center, double length, int nodes) {
    if (!(length > 0.0)) throw_validation("cosine_squared_prior", "length must be positive");
    const double k = std::numbers::pi / length;
    const QuadratureRule q = gauss_legendre(nodes, center - 0.5 * length, center + 0.5 * length);
    Prior out = tensor_prior(
        {q},
        [&](const RVector& z, RVector& theta, double& dens, RVector& grad) {
            theta = z;
            const double x = k * (z(0) - center);
            dens = 2.0 / length * std::cos(x) * std::cos(x);
            grad = RVector::Constant(1, -2.0 / length * k * std::sin(2.0 * x));
        },
        1.0);
    out.name = "cosine-squared";
    out.boundary_vanishing = true;
    out.validate();
    return out;
}

Prior uniform_sphere_prior(int nodes_per_axis) {
    std::vector<QuadratureRule> axes{gauss_legendre(nodes_per_axis, 0.0, std::numbers::pi),
                                     gauss_legendre(nodes_per_axis, 0.0, 2.0 * std::numbers::pi)};
    Prior out = tensor_prior(
        axes,
        [](const RVector& z, RVector& theta, double& dens, RVector& grad) {
            theta = z;
            dens = std::sin(z(0)) / (4.0 * std::numbers::pi);
            grad = RVector::Zero(2);
            grad(0) = std::cos(z(0)) / (4.0 * std::numbers::pi);
        },
        1.0);
    out.name = "uniform-sphere";
    out.validate();
    return out;
}

Prior radial_prior(const std::function<double(double)>& w, int r_nodes, int angle_nodes) {
    std::vector<QuadratureRule> axes{gauss_legendre(r_nodes, 0.0, 1.0),
                                     gauss_legendre(angle_nodes, 0.0, std::numbers::pi),
                                     gauss_legendre(angle_nodes, 0.0, 2.0 * std::numbers::pi)};
    Prior out = tensor_prior(
        axes,
        [&](const RVector& z, RVector& theta, double& dens, RVector& grad) {
            theta = z;
            dens = w(z(0)) * std::sin(z(1)) / (4.0 * std::numbers::pi);
            grad = RVector::Zero(3);
        },
        1.0);
    out.gradient.clear();
    out.name = "uniform-radial";
    out.validate();
    return out;
}

Prior radial_prior_fixed_direction(const std::function<double(double)>& w, double theta, double phi, int r_nodes) {
    const QuadratureRule q = gauss_legendre(r_nodes, 0.0, 1.0);
    Prior out;
    out.name = "radial";
    out.weights = q.weights;
    out.density.resize(q.size());
    for (Eigen::Index k = 0; k < q.size(); ++k) {
        RVector x(3);
        x << q.nodes(k), theta, phi;
        out.nodes.push_back(x);
        out.density(k) = w(q.nodes(k));
    }
    out.validate();
    return out;
}

BayesSingleResult bayes_optimal_single(const ParametricModel& m, const Prior& prior) {
    const char* where = "bayes_optimal_single";
    check_model_prior(where, m, prior);
    if (m.param_count() != 1) throw_validation(where, "model must have a single parameter");
    BayesSingleResult out;
    const RVector mean = prior.mean();
    out.prior_mean = mean(0);
    out.prior_variance = prior.covariance()(0, 0);
    const Averages avg = average_states(m, prior, mean);
    out.rho_bar = avg.rho_bar;
    out.rho_bar_prime = avg.rho_bar_prime[0];
    out.seed = seeds(where, avg)[0];
    out.cost = out.prior_variance - (avg.rho_bar.matrix() * out.seed.matrix() * out.seed.matrix()).trace().real();
    const Spectrum sp = eig_hermitian(out.seed);
    out.projectors = sp.vectors;
    out.estimates = sp.values.array() + out.prior_mean;
    return out;
}

double bayes_lower_multi(const ParametricModel& m, const Prior& prior, const CostMatrix& c) {
    const char* where = "bayes_lower_multi";
    check_model_prior(where, m, prior);
    const int p = m.param_count();
    if (c.size() != p) throw_validation(where, "cost size does not match the parameter count");
    const RVector mean = prior.mean();
    const Averages avg = average_states(m, prior, mean);
    const std::vector<HermMatrix> lam = seeds(where, avg);
    RMatrix k(p, p);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            k(i, j) = (avg.rho_bar.matrix() * lam[i].matrix() * lam[j].matrix()).trace().real();
        }
    }
    return (c.matrix() * prior.covariance()).trace() - (c.matrix() * k).trace();
}

double van_trees_bound(const ParametricModel& m, const Prior& prior, const CostMatrix& c, int copies) {
    const char* where = "van_trees_bound";
    check_model_prior(where, m, prior);
    if (!prior.boundary_vanishing) {
        throw_validation(where, "prior does not vanish on the boundary of its support, the bound does not apply");
    }
    if (prior.gradient.empty()) throw_validation(where, "prior has no density gradient");
    if (copies < 1) throw_validation(where, "copies must be positive");
    const int p = m.param_count();
    if (c.size() != p) throw_validation(where, "cost size does not match the parameter count");
    RMatrix fbar = RMatrix::Zero(p, p);
    RMatrix info = RMatrix::Zero(p, p);
    for (Eigen::Index k = 0; k < prior.size(); ++k) {
        const double mass = prior.weights(k) * prior.density(k);
        if (!(prior.density(k) > 1e-300)) continue;
        fbar += mass * sld_set(m.evaluate(prior.nodes[k])).qfi;
        info += prior.weights(k) * prior.gradient[k] * prior.gradient[k].transpose() / prior.density(k);
    }
    const RMatrix total = copies * fbar + info;
    return (c.matrix() * total.inverse()).trace();
}

double bayes_holevo_asymptotic(const ParametricModel& m, const Prior& prior, const CostField& c,
                               const HcrOptions& opts) {
    check_model_prior("bayes_holevo_asymptotic", m, prior);
    double total = 0.0;
    for (Eigen::Index k = 0; k < prior.size(); ++k) {
        const double mass = prior.weights(k) * prior.density(k);
        if (mass == 0.0) continue;
        total += mass * hcr_bound(m.evaluate(prior.nodes[k]), c(prior.nodes[k]), opts).value;
    }
    return total;
}

double bayes_holevo_asymptotic(const ParametricModel& m, const Prior& prior, const CostMatrix& c,
                               const HcrOptions& opts) {
    return bayes_holevo_asymptotic(m, prior, [&c](const RVector&) { return c; }, opts);
}

double covariant_pure_qubit_cost(int n) {
    if (n < 1) throw_validation("covariant_pure_qubit_cost", "n must be at least 1");
    return 4.0 / (n + 2.0);
}

CovariantQubitCost covariant_mixed_qubit_cost(const CovariantQubitSpec& spec) {
    const char* where = "covariant_mixed_qubit_cost";
    if (spec.n < 1 || spec.n > 10000) throw_validation(where, "n must be in [1, 10000]");
    if (spec.nodes < 64) throw_validation(where, "at least 64 quadrature nodes are required");
    if (!spec.w) throw_validation(where, "radial density is missing");
    // r = sin t keeps sqrt(1 - r^2) = cos t smooth at the edge r = 1, where a
    // rule placed directly in r converges only algebraically.
    QuadratureRule q = gauss_legendre(spec.nodes, 0.0, 0.5 * std::numbers::pi);
    for (Eigen::Index k = 0; k < q.size(); ++k) {
        q.weights(k) *= std::cos(q.nodes(k));
        q.nodes(k) = std::sin(q.nodes(k));
    }
    RVector wr(q.size());
    for (Eigen::Index k = 0; k < q.size(); ++k) {
        wr(k) = spec.w(q.nodes(k));
        if (!(wr(k) >= 0.0)) throw_validation(where, "radial density must be non-negative");
    }
    const double mass = q.weights.dot(wr);
    if (std::abs(mass - 1.0) > kPriorNormTol) {
        throw_validation(where, "radial density integrates to " + std::to_string(mass) + ", not 1");
    }
    const int n = spec.n;
    CovariantQubitCost out;
    out.r_estimates.resize(n / 2 + 1);
    double overlap = 0.0;
    Eigen::Index slot = 0;
    for (int two_j = n; two_j >= 0; two_j -= 2) {
        const double j = 0.5 * two_j;
        double a = 0.0;  // m_j v_j^z
        double b = 0.0;  // m_j v_j^0
        for (Eigen::Index k = 0; k < q.size(); ++k) {
            const double r = q.nodes(k);
            const double pj = std::exp(spin_log_weight(n, two_j, r));
            const double u = std::log1p(r) - std::log1p(-r);
            const double mass_k = q.weights(k) * wr(k) * pj;
            a += mass_k * r / (j + 1.0) * spin_mean_m(two_j, u);
            b += mass_k * std::sqrt(1.0 - r * r);
        }
        const double norm = std::hypot(a, b);
        if (!std::isfinite(norm)) throw_precision(where, "non-finite overlap at 2j = " + std::to_string(two_j));
        out.r_estimates(slot++) = norm > 0.0 ? std::abs(a) / norm : 0.0;
        overlap += norm;
    }
    out.exact = 2.0 * (1.0 - overlap);
    double asym = 0.0;
    for (Eigen::Index k = 0; k < q.size(); ++k) asym += q.weights(k) * wr(k) * (3.0 + 2.0 * q.nodes(k));
    out.asymptotic = asym / n;
    if (!std::isfinite(out.exact)) throw_precision(where, "cost is not finite");
    return out;
}

}  // namespace holevo
