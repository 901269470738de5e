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

// Shared SDP for the Holevo-type objectives:
//
//     minimize tr W  over real symmetric W (s x s) and real w
//     subject to W >= M(w)^dagger M(w),  M(w) = M0 + sum_k w_k M_k  (complex r x s).
//
// The constraint is the Schur complement of [[W, M^dagger], [M, I]] >= 0,
// which is linear in (W, w) and is handed to the real solver through the
// complex embedding.

#ifndef HOLEVO_SRC_GRAM_LMI_HPP
#define HOLEVO_SRC_GRAM_LMI_HPP

#include <vector>

#include "holevo/matrix.hpp"
#include "holevo/sdp.hpp"

namespace holevo::detail {

struct GramLmiResult {
    RVector w;           ///< Coefficients for the original M_k (a minimal-norm choice).
    RMatrix w_matrix;    ///< Optimal W.
    double lower = 0.0;  ///< Certified value from the dual side.
    SdpSolution sdp;
    int free_vars = 0;  ///< Independent directions kept after reduction.
};

/// C = K K^T with K of full column rank equal to rank(C).
RMatrix cost_factor(const RMatrix& c);

GramLmiResult solve_gram_lmi(const CMatrix& m0, const std::vector<CMatrix>& mk, const SdpOptions& opts);

}  // namespace holevo::detail

#endif  // HOLEVO_SRC_GRAM_LMI_HPP
