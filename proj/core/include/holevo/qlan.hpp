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

#ifndef HOLEVO_QLAN_HPP
#define HOLEVO_QLAN_HPP

#include <string>
#include <vector>

#include "holevo/matrix.hpp"

namespace holevo {

/// One displaced-thermal quantum mode of the limit model, for the pair (i, j), i < j.
struct LimitMode {
    int i = 0;
    int j = 0;
    double shift_scale = 0.0;  ///< sqrt(2 / (mu_i - mu_j))
    double thermal_cov = 0.0;  ///< (mu_i + mu_j) / (2 (mu_i - mu_j)), always >= 1/2
};

/// Gaussian limit of n copies of a full-rank qudit with spectrum mu.
struct QuditLimitModel {
    RVector mu;             ///< Strictly descending, positive, sums to 1.
    RMatrix classical_cov;  ///< (d-1) x (d-1): delta_ij mu_i - mu_i mu_j
    std::vector<LimitMode> modes;
    std::vector<std::string> warnings;

    Eigen::Index dim() const { return mu.size(); }
};

/// Validates and sorts a spectrum. Ascending input is reordered and a
/// warning is appended to `warnings` when non-null.
RVector checked_spectrum(const RVector& mu, std::vector<std::string>* warnings = nullptr);

QuditLimitModel limit_model(const RVector& mu);

/// sum_i mu_i (1 - mu_i) + 2 sum_i (d - i) mu_i, with i counted from 1.
double lam_frobenius(const RVector& mu);

/// (d - 1) + 4 sum_{i<j} mu_i / (mu_i + mu_j).
double lam_bures(const RVector& mu);

}  // namespace holevo

#endif  // HOLEVO_QLAN_HPP
