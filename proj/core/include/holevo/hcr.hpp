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

#ifndef HOLEVO_HCR_HPP
#define HOLEVO_HCR_HPP

#include <vector>

#include "holevo/bounds.hpp"
#include "holevo/matrix.hpp"
#include "holevo/model.hpp"
#include "holevo/sdp.hpp"

namespace holevo {

struct HcrOptions {
    SdpOptions sdp;
    double clip = 1e-12;  ///< Eigenvalues of S below this are treated as zero.
};

/// Result of the Holevo bound minimization at one point.
///
/// `value` is the trace-norm objective evaluated at `x_ops`, an attained
/// upper value; `lower` is the certificate from the dual side. They agree to
/// the solver tolerance when the solve is optimal.
struct HcrSolution {
    double value = 0.0;
    double lower = 0.0;
    std::vector<HermMatrix> x_ops;  ///< Locally unbiased, recentred so tr(rho X_i) = 0.
    RMatrix v_matrix;               ///< Real V >= Z.
    CMatrix z_matrix;               ///< Z_ij = tr(rho X_i X_j).
    bool v_attains_value = false;   ///< tr(C V) == value; false only for singular C.
    SdpSolution sdp;
    int free_vars = 0;
};

HcrSolution hcr_bound(const ModelPoint& pt, const CostMatrix& c, const HcrOptions& opts = {});

/// Z_ij = tr(rho X_i X_j).
CMatrix z_matrix(const HermMatrix& rho, const std::vector<HermMatrix>& x);

/// tr(C Re Z) + || sqrt(C) Im Z sqrt(C) ||_1 for a candidate tuple X.
/// Checks tr(d_i rho X_j) = delta_ij within `lu_tol` first.
double evaluate_candidate(const ModelPoint& pt, const std::vector<HermMatrix>& x, const CostMatrix& c,
                          double lu_tol = 1e-6);

/// S_ab = tr(B_a B_b rho) in the basis from hermitian_basis.
CMatrix gram_operator(const HermMatrix& rho, const std::vector<HermMatrix>& basis);

struct MulticopyValues {
    double single = 0.0;
    double multi = 0.0;
};

/// Holevo bound for one copy and for n copies at the same point.
MulticopyValues hcr_multicopy_check(const ParametricModel& m, const RVector& theta, const CostMatrix& c, int n,
                                    const HcrOptions& opts = {}, Eigen::Index cap = 256);

/// SLD, RLD, HGM and HCR at one point. Bounds that do not apply are left
/// empty with a reason in `notes`.
BoundReport bound_report(const ModelPoint& pt, const CostMatrix& c, const HcrOptions& opts = {});

}  // namespace holevo

#endif  // HOLEVO_HCR_HPP
