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

#ifndef HOLEVO_MODEL_HPP
#define HOLEVO_MODEL_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "holevo/matrix.hpp"

namespace holevo {

/// A density matrix together with its parameter derivatives at one point.
struct ModelPoint {
    HermMatrix rho;
    std::vector<HermMatrix> grads;
    RVector theta;

    int param_count() const { return static_cast<int>(grads.size()); }
    Eigen::Index dim() const { return rho.dim(); }

    /// Checks rho is PSD with unit trace (tolerance 1e-10) and every gradient
    /// is traceless (tolerance 1e-9). Raises a validation error otherwise.
    static ModelPoint make(HermMatrix rho, std::vector<HermMatrix> grads, RVector theta = {});
};

/// Real symmetric positive-semidefinite weight matrix on parameter space.
class CostMatrix {
   public:
    CostMatrix() = default;
    explicit CostMatrix(const RMatrix& g);

    static CostMatrix identity(int p);
    static CostMatrix diagonal(const RVector& d);
    /// The rank-one cost c c^T.
    static CostMatrix outer(const RVector& c);

    const RMatrix& matrix() const { return g_; }
    int size() const { return static_cast<int>(g_.rows()); }
    int rank(double rel_tol = 1e-10) const;
    RMatrix sqrt() const { return sqrt_psd(g_); }

   private:
    RMatrix g_;
};

/// A smooth family theta -> rho_theta.
///
/// Derivatives come from an analytic map when one is supplied. Otherwise they
/// are central differences with a per-coordinate step (default 1e-5). In both
/// cases they are symmetrized and projected to zero trace.
class ParametricModel {
   public:
    using StateFn = std::function<CMatrix(const RVector&)>;
    using GradFn = std::function<std::vector<CMatrix>(const RVector&)>;

    ParametricModel(std::string name, int param_count, Eigen::Index dim, StateFn state, GradFn grads = nullptr,
                    double step = 1e-5);

    const std::string& name() const { return name_; }
    int param_count() const { return p_; }
    Eigen::Index dim() const { return dim_; }
    bool has_analytic_gradient() const { return static_cast<bool>(grads_); }
    double step() const { return step_; }

    /// rho_theta, validated as a density matrix.
    HermMatrix state(const RVector& theta) const;
    std::vector<HermMatrix> analytic_gradient(const RVector& theta) const;
    std::vector<HermMatrix> numeric_gradient(const RVector& theta) const;
    /// Analytic gradient when available, numeric otherwise.
    std::vector<HermMatrix> gradient(const RVector& theta) const;

    ModelPoint evaluate(const RVector& theta) const;

    /// Copy of this model that ignores the analytic map.
    ParametricModel numeric_only(double step = 1e-5) const;

    /// The raw state map, without density-matrix validation.
    const StateFn& state_fn() const { return state_; }

   private:
    void check_theta(const RVector& theta) const;

    std::string name_;
    int p_;
    Eigen::Index dim_;
    StateFn state_;
    GradFn grads_;
    double step_;
};

/// Pure qubit on the Bloch sphere, parameters (theta, phi).
ParametricModel pure_qubit();
/// Mixed qubit in the x-z plane, parameters (r, theta), phi fixed to 0.
ParametricModel qubit_r_theta();
/// Full Bloch ball in spherical coordinates (r, theta, phi).
ParametricModel qubit_bloch_spherical();
/// Full Bloch ball in Cartesian coordinates (r_x, r_y, r_z).
ParametricModel qubit_bloch_cartesian();

/// Phase family r (cos phi, sin phi, 0) with fixed Bloch length r, parameter phi.
ParametricModel qubit_phase(double r);

/// Looks up one of the families above by name: pure_qubit, qubit_r_theta,
/// qubit_bloch_spherical, qubit_bloch_cartesian.
ParametricModel builtin_model(std::string_view name);
std::vector<std::string> builtin_model_names();

/// n-fold tensor power. Raises a validation error if dim^n exceeds `cap`.
ParametricModel multi_copy(const ParametricModel& m, int n, Eigen::Index cap = 256);

/// Gradients with respect to new parameters theta' whose Jacobian is
/// J_ij = d theta'_i / d theta_j: grads' = (J^T)^{-1} grads. The theta field
/// keeps the original coordinates.
ModelPoint reparametrize(const ModelPoint& pt, const RMatrix& jacobian);

/// Cost on the original parameters induced by a cost on new ones: J^T C' J.
CostMatrix pull_back_cost(const CostMatrix& c, const RMatrix& jacobian);

}  // namespace holevo

#endif  // HOLEVO_MODEL_HPP
