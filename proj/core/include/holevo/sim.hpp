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

#ifndef HOLEVO_SIM_HPP
#define HOLEVO_SIM_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "holevo/matrix.hpp"
#include "holevo/model.hpp"

namespace holevo {

/// Positive operators summing to the identity.
struct Povm {
    std::vector<HermMatrix> elements;
    std::vector<std::string> labels;

    /// Checks each element has min eigenvalue >= -1e-10 and completeness within 1e-9.
    void validate() const;
    Eigen::Index dim() const { return elements.empty() ? 0 : elements.front().dim(); }
};

/// Projective measurement onto the columns of a unitary.
Povm projective_povm(const CMatrix& basis);

/// Measure sigma_k with probability weights(k - 1), k = x, y, z.
Povm pauli_povm(const RVector& weights);

/// Fisher information of p_theta(m) = tr(rho_theta M_m).
///
/// Outcomes with probability below 1e-12 are dropped, with a note in
/// `warnings`, when their derivative also vanishes; otherwise the model is
/// singular there and a validation error is raised.
RMatrix classical_fisher(const Povm& povm, const ModelPoint& pt, std::vector<std::string>* warnings = nullptr);

/// A mixture of projective qubit measurements along fixed unit vectors.
struct LocalStrategy {
    RMatrix axes;     ///< 3 x k, unit Bloch directions.
    RVector weights;  ///< Mixing probabilities, one per axis.
    RMatrix fisher;
    double cost = 0.0;  ///< tr(C F^{-1}); infinite when F is singular.
};

/// Evaluates the mixture with the given weights.
LocalStrategy local_strategy(const ModelPoint& pt, const CostMatrix& c, const RMatrix& axes, const RVector& weights);

/// Best weights for the given axes (default: x, y, z). When exactly p axes
/// carry information the optimum is closed form with weights proportional
/// to the square roots of the per-axis costs; otherwise it is found
/// iteratively.
LocalStrategy weighted_local_strategy(const ModelPoint& pt, const CostMatrix& c,
                                      const RMatrix& axes = RMatrix::Identity(3, 3));

/// Measurement directions at which the weighted strategy reaches the
/// Hayashi-Gill-Massar value for this cost.
RMatrix optimal_local_axes(const ModelPoint& pt, const CostMatrix& c);

/// Multinomial outcome counts of `trials` measurements, deterministic in `seed`.
std::vector<long long> sample_povm(const HermMatrix& rho, const Povm& povm, long long trials, std::uint64_t seed);

enum class RadiusEstimator {
    locally_unbiased,  ///< r + d_r log p_j / F_r, built at the true r
    spin_length,       ///< 2j / n clipped to [0, 1]
};

struct CollectiveRunConfig {
    int n = 2;
    double r = 0.5;
    double theta = 0.0;
    double c_r = 1.0;  ///< Weight on (r_hat - r)^2; (theta_hat - theta)^2 is weighted by r^2.
    long long trials = 100000;
    std::uint64_t seed = 1;
    RadiusEstimator estimator = RadiusEstimator::locally_unbiased;
    int threads = 0;  ///< 0: HOLEVO_THREADS or the hardware count.
};

struct CollectiveRunResult {
    double n_cost = 0.0;    ///< n times the mean loss
    double n_stderr = 0.0;  ///< n times the standard error of the mean
    double expected = 0.0;  ///< n (c_r / F_r + r^2 / F_theta) for the unbiased estimators
    double fisher_r = 0.0;
    double fisher_theta = 0.0;
};

/// Collective strategy on the (r, theta) qubit: measure the total spin j,
/// then J_x inside the block.
CollectiveRunResult collective_estimation_run(const CollectiveRunConfig& cfg);

/// Worker count: HOLEVO_THREADS if set to a positive integer, else the hardware count.
int worker_count();

struct CurveRow {
    int n = 0;
    double r = 0.0;
    std::string bound_name;
    double value = 0.0;
    double stderr_value = 0.0;
};

/// Columns n, r, bound_name, value, stderr with a header line.
void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows);

}  // namespace holevo

#endif  // HOLEVO_SIM_HPP
