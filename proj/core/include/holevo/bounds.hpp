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

#ifndef HOLEVO_BOUNDS_HPP
#define HOLEVO_BOUNDS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holevo/matrix.hpp"
#include "holevo/model.hpp"

namespace holevo {

/// Symmetric logarithmic derivatives at a point and the quantities built from them.
struct SldSet {
    std::vector<HermMatrix> slds;
    RMatrix qfi;               ///< Re tr(rho L_i L_j)
    CMatrix mean_commutators;  ///< tr(rho [L_i, L_j]): purely imaginary, antisymmetric
    Eigen::Index dim = 0;

    int param_count() const { return static_cast<int>(slds.size()); }
};

SldSet sld_set(const ModelPoint& pt);

/// tr(C F^+) with F^+ the pseudo-inverse at relative threshold 1e-12.
/// Cost weight on the kernel of F raises an unidentifiable-parameter error.
double sld_cr_bound(const SldSet& s, const CostMatrix& c);

/// Right logarithmic derivative bound, full-rank states only:
/// tr(C Re F_R^{-1}) + || sqrt(C) Im F_R^{-1} sqrt(C) ||_1 with
/// (F_R)_ij = tr(d_i rho  rho^{-1}  d_j rho).
double rld_bound(const ModelPoint& pt, const CostMatrix& c);

/// The complex RLD information matrix on its own.
CMatrix rld_fisher(const ModelPoint& pt);

struct CompatibilityReport {
    double max_commutator = 0.0;      ///< max |tr(rho [L_i, L_j])|
    bool commutators_vanish = false;  ///< max_commutator <= 1e-10
    bool cost_full_rank = false;
    bool cost_rank_one = false;
    bool predicts_hcr_equals_sld = false;
};

CompatibilityReport compatibility_report(const SldSet& s, const CostMatrix& c);

struct DInvariance {
    bool invariant = false;
    int span_dim = 0;               ///< dimension of span{L_i}
    std::vector<HermMatrix> basis;  ///< basis of the smallest D-invariant span containing the L_i
    int steps = 0;
};

/// Closes span{L_i} under the superoperator D defined by {D(X), rho} = i [X, rho],
/// that is D(X)_ij = i (l_j - l_i) / (l_i + l_j) X_ij in the eigenbasis of rho.
DInvariance d_invariance_check(const ModelPoint& pt);

/// The D superoperator itself, exposed for testing.
HermMatrix apply_d(const HermMatrix& rho, const HermMatrix& x);

/// (tr sqrt(F^{-1/2} C F^{-1/2}))^2 for qubit models.
double hgm_bound(const SldSet& s, const CostMatrix& c);

/// Named scalar bounds at a single point. Absent values carry a reason in `notes`.
struct BoundReport {
    std::optional<double> sld;
    std::optional<double> rld;
    std::optional<double> hgm;
    std::optional<double> hcr;
    std::map<std::string, std::string> notes;
    std::map<std::string, double> diagnostics;
};

}  // namespace holevo

#endif  // HOLEVO_BOUNDS_HPP
