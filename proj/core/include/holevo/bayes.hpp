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

#ifndef HOLEVO_BAYES_HPP
#define HOLEVO_BAYES_HPP

#include <functional>
#include <string>
#include <vector>

#include "holevo/hcr.hpp"
#include "holevo/matrix.hpp"
#include "holevo/model.hpp"

namespace holevo {

/// A prior discretized on quadrature nodes.
///
/// Integrals are sum_k weights_k density_k f(nodes_k). `gradient` holds the
/// density gradient at each node and is used only by the Van Trees bound.
struct Prior {
    std::vector<RVector> nodes;
    RVector weights;
    RVector density;
    std::vector<RVector> gradient;
    bool boundary_vanishing = false;
    std::string name;

    int param_count() const { return nodes.empty() ? 0 : static_cast<int>(nodes.front().size()); }
    Eigen::Index size() const { return static_cast<Eigen::Index>(nodes.size()); }

    /// Checks shapes and that the prior integrates to 1 within 1e-6.
    void validate() const;
    RVector mean() const;
    RMatrix covariance() const;
};

/// Point masses. Weights must sum to 1; the Van Trees bound is refused.
Prior discrete_prior(const std::vector<RVector>& points, const RVector& probabilities);

/// Gaussian prior on a tensor Gauss-Legendre grid covering mean +- `width`
/// standard deviations along each principal axis.
Prior gaussian_prior(const RVector& mean, const RMatrix& cov, int nodes_per_axis = 128, double width = 10.0);

/// Uniform density on [a, b]; does not vanish at the ends.
Prior uniform_prior(double a, double b, int nodes = 128);

/// (2/L) cos^2(pi (x - c) / L) on [c - L/2, c + L/2]; vanishes at both ends.
Prior cosine_squared_prior(double center, double length, int nodes = 128);

/// Uniform on the sphere in (theta, phi): density sin(theta) / (4 pi).
Prior uniform_sphere_prior(int nodes_per_axis = 32);

/// (r, theta, phi) with density w(r) sin(theta) / (4 pi); w integrates to 1 on [0, 1].
Prior radial_prior(const std::function<double(double)>& w, int r_nodes = 64, int angle_nodes = 16);

/// (r, theta, phi) with radial density w(r), angles held fixed. Appropriate
/// for integrands that do not depend on the direction.
Prior radial_prior_fixed_direction(const std::function<double(double)>& w, double theta, double phi, int r_nodes = 128);

/// Parameter-dependent cost weight.
using CostField = std::function<CostMatrix(const RVector&)>;

/// Optimal quadratic-cost Bayes estimator for a scalar parameter.
struct BayesSingleResult {
    double cost = 0.0;
    double prior_mean = 0.0;
    double prior_variance = 0.0;
    HermMatrix rho_bar;        ///< Prior average of rho.
    HermMatrix rho_bar_prime;  ///< Prior average of (theta - mean) rho.
    HermMatrix seed;           ///< Solves seed rho_bar + rho_bar seed = 2 rho_bar_prime.
    CMatrix projectors;        ///< Columns: measurement eigenbasis of the seed.
    RVector estimates;         ///< Estimate attached to each column, mean included.
};

BayesSingleResult bayes_optimal_single(const ParametricModel& m, const Prior& prior);

/// Lower bound tr(C Sigma) - tr(C K), K_ij = Re tr(rho_bar seed_i seed_j). Not tight in general.
double bayes_lower_multi(const ParametricModel& m, const Prior& prior, const CostMatrix& c);

/// tr[C (n F_bar + I_prior)^{-1}] with F_bar the prior mean of the QFI.
/// Requires prior.boundary_vanishing.
double van_trees_bound(const ParametricModel& m, const Prior& prior, const CostMatrix& c, int copies = 1);

/// Prior average of the Holevo bound, the per-copy asymptotic Bayes cost.
double bayes_holevo_asymptotic(const ParametricModel& m, const Prior& prior, const CostField& c,
                               const HcrOptions& opts = {});
double bayes_holevo_asymptotic(const ParametricModel& m, const Prior& prior, const CostMatrix& c,
                               const HcrOptions& opts = {});

/// Fidelity cost of the optimal covariant measurement on n pure qubits: 4 / (n + 2).
double covariant_pure_qubit_cost(int n);

struct CovariantQubitSpec {
    int n = 1;
    std::function<double(double)> w;  ///< Radial density on [0, 1].
    int nodes = 128;                  ///< Gauss-Legendre order, at least 64.
};

struct CovariantQubitCost {
    double exact = 0.0;
    double asymptotic = 0.0;  ///< int w(r) (3 + 2r) dr / n
    RVector r_estimates;      ///< Optimal Bloch length guess for each j, j descending.
};

/// Optimal Bayes fidelity cost for n copies of a qubit under a rotation
/// invariant prior with radial density w.
CovariantQubitCost covariant_mixed_qubit_cost(const CovariantQubitSpec& spec);

}  // namespace holevo

#endif  // HOLEVO_BAYES_HPP
