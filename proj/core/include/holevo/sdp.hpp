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

#ifndef HOLEVO_SDP_HPP
#define HOLEVO_SDP_HPP

#include <iosfwd>
#include <vector>

#include "holevo/matrix.hpp"

namespace holevo {

/// Block-diagonal real symmetric matrix, one dense matrix per block.
using BlockMatrix = std::vector<RMatrix>;

struct SdpConstraint {
    BlockMatrix a;
    double b = 0.0;
};

/// Standard primal form
///
///     minimize   <C, X>
///     subject to <A_i, X> = b_i,  X >= 0,
///
/// with dual
///
///     maximize   b^T y
///     subject to C - sum_i y_i A_i = Z >= 0.
struct SdpProblem {
    std::vector<Eigen::Index> blocks;
    BlockMatrix c;
    std::vector<SdpConstraint> constraints;

    /// Raises a validation error on shape mismatches or asymmetric data.
    void validate() const;
};

struct SdpOptions {
    double gap_tol = 1e-8;   ///< Relative to 1 + |primal value|.
    double feas_tol = 1e-9;  ///< Relative residual norms.
    int max_iter = 200;
};

enum class SdpStatus { optimal, max_iter, infeasible_detected };

const char* status_name(SdpStatus s);

struct SdpSolution {
    BlockMatrix x;
    RVector y;
    BlockMatrix z;
    double primal_value = 0.0;
    double dual_value = 0.0;
    double gap = 0.0;  ///< |primal - dual|
    double primal_infeasibility = 0.0;
    double dual_infeasibility = 0.0;
    double complementarity = 0.0;  ///< <X, Z>
    int iterations = 0;
    SdpStatus status = SdpStatus::max_iter;

    bool optimal() const { return status == SdpStatus::optimal; }
};

/// Dense primal-dual interior-point solve. Never throws on non-convergence;
/// inspect `status` instead. Throws a validation error on malformed input.
SdpSolution solve(const SdpProblem& problem, const SdpOptions& opts = {});

/// [[Re h, -Im h], [Im h, Re h]]: PSD exactly when h is.
RMatrix complex_psd_embed(const CMatrix& h);

/// Writes a plain-text dump: block sizes, C, then each (b_i, A_i).
void write_problem(std::ostream& os, const SdpProblem& problem);

}  // namespace holevo

#endif  // HOLEVO_SDP_HPP
