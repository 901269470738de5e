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

#ifndef HOLEVO_TESTS_ORACLES_HPP
#define HOLEVO_TESTS_ORACLES_HPP

// Independent reference computations for the test suites. Nothing here calls
// the routine it is meant to check; the dense spin tools work on the full
// 2^n-dimensional space and the SDP generator plants a known feasible pair.

#include <random>
#include <vector>

#include "holevo/gaussian.hpp"
#include "holevo/matrix.hpp"
#include "holevo/model.hpp"
#include "holevo/sdp.hpp"

namespace holevo::oracle {

using Rng = std::mt19937_64;

RMatrix random_real(Eigen::Index rows, Eigen::Index cols, Rng& rng);
CMatrix random_complex(Eigen::Index rows, Eigen::Index cols, Rng& rng);
CMatrix random_unitary(Eigen::Index d, Rng& rng);

/// Full-rank density matrix with smallest eigenvalue at least `floor`.
HermMatrix random_density(Eigen::Index d, Rng& rng, double floor = 0.02);
/// Traceless Hermitian matrix with unit Frobenius norm.
HermMatrix random_traceless(Eigen::Index d, Rng& rng);
/// Random full-rank state with p random tangent directions.
ModelPoint random_model_point(Eigen::Index d, int p, Rng& rng);
/// G G^T + floor I.
RMatrix random_psd(Eigen::Index p, Rng& rng, double floor = 0.05);

/// Total spin operators sum_k sigma_a^{(k)} / 2 on n qubits.
struct DenseSpin {
    CMatrix jx;
    CMatrix jy;
    CMatrix jz;
    CMatrix j2;
};
DenseSpin dense_total_spin(int n);
CMatrix tensor_power(const CMatrix& m, int n);
/// Projector onto the J^2 = j(j + 1) eigenspace, from a dense diagonalization.
CMatrix j2_projector(const DenseSpin& s, int two_j);
/// Single-spin operators built from the ladder matrix elements directly.
DenseSpin spin_j_operators(int two_j);

/// Problem with a planted strictly feasible primal X0 and dual (y0, Z0).
struct PlantedSdp {
    SdpProblem problem;
    BlockMatrix x0;
    RVector y0;
    double upper = 0.0;  ///< <C, X0>, at least the optimum
    double lower = 0.0;  ///< b^T y0, at most the optimum
};
PlantedSdp random_planted_sdp(Rng& rng);

/// Gaussian shift model with p = 2q + c parameters and invertible A. With
/// `pure` set the quantum block is 1/2 M M^T for a random symplectic M;
/// otherwise a random positive part is added on top of it.
GaussianShiftModel random_gaussian_model(int q_modes, int c_vars, bool pure, Rng& rng);

double block_inner(const BlockMatrix& a, const BlockMatrix& b);
double block_min_eig(const BlockMatrix& a);

/// Fourth-order central difference of the raw state map along coordinate k.
CMatrix five_point_derivative(const ParametricModel& m, const RVector& theta, int k, double h);

}  // namespace holevo::oracle

#endif  // HOLEVO_TESTS_ORACLES_HPP
