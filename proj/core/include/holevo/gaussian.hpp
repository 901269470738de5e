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

#ifndef HOLEVO_GAUSSIAN_HPP
#define HOLEVO_GAUSSIAN_HPP

#include <optional>

#include "holevo/matrix.hpp"
#include "holevo/model.hpp"
#include "holevo/sdp.hpp"

namespace holevo {

/// Symplectic form diag(Omega, ..., Omega, 0, ..., 0) with Omega = [[0, 1], [-1, 0]].
RMatrix symplectic_form(int q_modes, int c_vars);

/// Gaussian shift model: coordinates R = (Q_1, P_1, ..., Q_q, P_q, X_1, ..., X_c)
/// in a state with mean A theta and covariance V.
///
/// Conventions: hbar = 1 and [Q, P] = i, so the vacuum has V = I / 2.
class GaussianShiftModel {
   public:
    /// Validates V - iS/2 >= -1e-9, symmetry of V, and full column rank of A.
    GaussianShiftModel(int q_modes, int c_vars, const RMatrix& a, const RMatrix& v);

    int q_modes() const { return q_; }
    int c_vars() const { return c_; }
    int r_dim() const { return 2 * q_ + c_; }
    int param_count() const { return static_cast<int>(a_.cols()); }
    const RMatrix& a() const { return a_; }
    const RMatrix& v() const { return v_; }
    RMatrix s() const { return symplectic_form(q_, c_); }

   private:
    int q_;
    int c_;
    RMatrix a_;
    RMatrix v_;
};

struct GaussianQfi {
    RMatrix qfi;               ///< A^T V^{-1} A
    RMatrix sld_coefficients;  ///< Row i gives L_i as a combination of the centred coordinates.
};

GaussianQfi gaussian_qfi(const GaussianShiftModel& g);

struct GaussianHcr {
    double value = 0.0;
    RMatrix b;                 ///< Optimal B with B A = I.
    bool closed_form = false;  ///< True when computed with B = A^{-1}.
    std::optional<SdpSolution> sdp;
};

/// Holevo bound of the shift model. With p = r_dim the minimizer is A^{-1};
/// otherwise an SDP over B = B0 + Y L^T runs, L spanning the left null
/// space of A. `force_sdp` skips the closed form.
GaussianHcr gaussian_hcr(const GaussianShiftModel& g, const CostMatrix& c, bool force_sdp = false,
                         const SdpOptions& opts = {});

/// tr(C B V B^T) + 1/2 || sqrt(C) B S B^T sqrt(C) ||_1 for any B.
double gaussian_linear_objective(const GaussianShiftModel& g, const CostMatrix& c, const RMatrix& b);

/// RLD bound with F_R = A^T (V + iS/2)^{-1} A. Requires V + iS/2 invertible.
double gaussian_rld_bound(const GaussianShiftModel& g, const CostMatrix& c);

/// Measurement of Y = B R + B R~ on the system plus an ancilla with
/// symplectic form -S and covariance `ancilla_cov`.
struct LinearMeasurement {
    RMatrix b;
    RMatrix ancilla_cov;
    bool ancilla_symplectic_negated = true;
    bool regularized = false;    ///< Unmeasured quantum directions were padded with a small epsilon.
    double measured_cost = 0.0;  ///< tr(C B V B^T) + tr(C B V~ B^T)
    double hcr_value = 0.0;
};

LinearMeasurement optimal_linear_measurement(const GaussianShiftModel& g, const CostMatrix& c,
                                             const SdpOptions& opts = {});

}  // namespace holevo

#endif  // HOLEVO_GAUSSIAN_HPP
