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

#include "holevo/model.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "holevo/error.hpp"

namespace holevo {

namespace {

constexpr double kStateTol = 1e-10;
constexpr double kGradTraceTol = 1e-9;
constexpr double kDomainSlack = 1e-12;

HermMatrix traceless_part(const CMatrix& m) {
    HermMatrix h = HermMatrix::hermitian_part(m);
    const double t = h.trace() / static_cast<double>(h.dim());
    return h - HermMatrix::identity(h.dim()) * t;
}

std::string fmt(double x) { return std::to_string(x); }

// Bloch vector (x, y, z) to a density matrix.
CMatrix bloch(double x, double y, double z) {
    return 0.5 * (pauli(0).matrix() + x * pauli(1).matrix() + y * pauli(2).matrix() + z * pauli(3).matrix());
}

// A traceless direction (x, y, z) . sigma / 2.
CMatrix bloch_dir(double x, double y, double z) {
    return 0.5 * (x * pauli(1).matrix() + y * pauli(2).matrix() + z * pauli(3).matrix());
}

void check_radius(const char* where, double r) {
    if (!(r >= -kDomainSlack && r <= 1.0 + kDomainSlack)) {
        throw_validation(where, "domain error: r = " + fmt(r) + " outside [0, 1]");
    }
}

void check_polar(const char* where, double theta) {
    if (!(theta >= -kDomainSlack && theta <= std::numbers::pi + kDomainSlack)) {
        throw_validation(where, "domain error: theta = " + fmt(theta) + " outside [0, pi]");
    }
}

}  // namespace

ModelPoint ModelPoint::make(HermMatrix rho, std::vector<HermMatrix> grads, RVector theta) {
    if (std::abs(rho.trace() - 1.0) > kStateTol) {
        throw_validation("ModelPoint", "model validity: tr(rho) = " + fmt(rho.trace()) + ", expected 1");
    }
    double lo = min_eigenvalue(rho);
    if (lo < -kStateTol) {
        throw_validation("ModelPoint", "model validity: rho has eigenvalue " + fmt(lo) + " < 0");
    }
    for (std::size_t i = 0; i < grads.size(); ++i) {
        if (grads[i].dim() != rho.dim()) {
            throw_validation("ModelPoint", "gradient " + std::to_string(i) + " has the wrong dimension");
        }
        if (std::abs(grads[i].trace()) > kGradTraceTol) {
            throw_validation("ModelPoint",
                             "gradient " + std::to_string(i) + " has trace " + fmt(grads[i].trace()) + ", expected 0");
        }
    }
    return ModelPoint{std::move(rho), std::move(grads), std::move(theta)};
}

CostMatrix::CostMatrix(const RMatrix& g) {
    if (g.rows() != g.cols()) throw_validation("CostMatrix", "matrix is not square");
    if (g.size() > 0) {
        double asym = (g - g.transpose()).cwiseAbs().maxCoeff();
        if (asym > 1e-12 * std::max(1.0, g.cwiseAbs().maxCoeff())) {
            throw_validation("CostMatrix", "matrix is not symmetric (defect " + fmt(asym) + ")");
        }
    }
    g_ = 0.5 * (g + g.transpose());
    if (g_.size() > 0) {
        Eigen::SelfAdjointEigenSolver<RMatrix> es(g_);
        if (es.eigenvalues()(0) < -1e-10) {
            throw_validation("CostMatrix", "matrix is not PSD (eigenvalue " + fmt(es.eigenvalues()(0)) + ")");
        }
    }
}

CostMatrix CostMatrix::identity(int p) { return CostMatrix(RMatrix::Identity(p, p)); }

CostMatrix CostMatrix::diagonal(const RVector& d) { return CostMatrix(RMatrix(d.asDiagonal())); }

CostMatrix CostMatrix::outer(const RVector& c) { return CostMatrix(RMatrix(c * c.transpose())); }

int CostMatrix::rank(double rel_tol) const {
    if (g_.size() == 0) return 0;
    Eigen::SelfAdjointEigenSolver<RMatrix> es(g_);
    const double top = es.eigenvalues().cwiseAbs().maxCoeff();
    int k = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        if (es.eigenvalues()(i) > rel_tol * top) ++k;
    }
    return k;
}

ParametricModel::ParametricModel(std::string name, int param_count, Eigen::Index dim, StateFn state, GradFn grads,
                                 double step)
    : name_(std::move(name)),
      p_(param_count),
      dim_(dim),
      state_(std::move(state)),
      grads_(std::move(grads)),
      step_(step) {
    if (p_ < 1) throw_validation("ParametricModel", "parameter count must be positive");
    if (dim_ < 1) throw_validation("ParametricModel", "Hilbert dimension must be positive");
    if (!state_) throw_validation("ParametricModel", "state map is empty");
    if (!(step_ > 0.0)) throw_validation("ParametricModel", "finite-difference step must be positive");
}

void ParametricModel::check_theta(const RVector& theta) const {
    if (theta.size() != p_) {
        throw_validation(name_, "expected " + std::to_string(p_) + " parameters, got " + std::to_string(theta.size()));
    }
}

HermMatrix ParametricModel::state(const RVector& theta) const {
    check_theta(theta);
    CMatrix m = state_(theta);
    if (m.rows() != dim_ || m.cols() != dim_) {
        throw_validation(name_, "state map returned a matrix of the wrong size");
    }
    HermMatrix rho(m, kStateTol);
    if (std::abs(rho.trace() - 1.0) > kStateTol) {
        throw_validation(name_, "model validity: tr(rho) = " + fmt(rho.trace()) + ", expected 1");
    }
    double lo = min_eigenvalue(rho);
    if (lo < -kStateTol) {
        throw_validation(name_, "model validity: rho has eigenvalue " + fmt(lo) + " < 0");
    }
    return rho;
}

std::vector<HermMatrix> ParametricModel::analytic_gradient(const RVector& theta) const {
    check_theta(theta);
    if (!grads_) throw_validation(name_, "no analytic derivative map");
    std::vector<CMatrix> raw = grads_(theta);
    if (static_cast<int>(raw.size()) != p_) throw_validation(name_, "derivative map returned the wrong count");
    std::vector<HermMatrix> out;
    out.reserve(raw.size());
    for (const CMatrix& g : raw) out.push_back(traceless_part(g));
    return out;
}

std::vector<HermMatrix> ParametricModel::numeric_gradient(const RVector& theta) const {
    check_theta(theta);
    std::vector<HermMatrix> out;
    out.reserve(p_);
    for (int i = 0; i < p_; ++i) {
        RVector up = theta;
        RVector dn = theta;
        up(i) += step_;
        dn(i) -= step_;
        out.push_back(traceless_part((state_(up) - state_(dn)) / (2.0 * step_)));
    }
    return out;
}

std::vector<HermMatrix> ParametricModel::gradient(const RVector& theta) const {
    return grads_ ? analytic_gradient(theta) : numeric_gradient(theta);
}

ModelPoint ParametricModel::evaluate(const RVector& theta) const {
    HermMatrix rho = state(theta);
    return ModelPoint{std::move(rho), gradient(theta), theta};
}

ParametricModel ParametricModel::numeric_only(double step) const {
    return ParametricModel(name_, p_, dim_, state_, nullptr, step);
}

ParametricModel pure_qubit() {
    auto state = [](const RVector& t) {
        check_polar("pure_qubit", t(0));
        const double th = t(0), ph = t(1);
        return bloch(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
    };
    auto grads = [](const RVector& t) {
        check_polar("pure_qubit", t(0));
        const double th = t(0), ph = t(1);
        return std::vector<CMatrix>{bloch_dir(std::cos(th) * std::cos(ph), std::cos(th) * std::sin(ph), -std::sin(th)),
                                    bloch_dir(-std::sin(th) * std::sin(ph), std::sin(th) * std::cos(ph), 0.0)};
    };
    return ParametricModel("pure_qubit", 2, 2, state, grads);
}

ParametricModel qubit_r_theta() {
    auto state = [](const RVector& t) {
        check_radius("qubit_r_theta", t(0));
        check_polar("qubit_r_theta", t(1));
        return bloch(t(0) * std::sin(t(1)), 0.0, t(0) * std::cos(t(1)));
    };
    auto grads = [](const RVector& t) {
        check_radius("qubit_r_theta", t(0));
        check_polar("qubit_r_theta", t(1));
        const double r = t(0), th = t(1);
        return std::vector<CMatrix>{bloch_dir(std::sin(th), 0.0, std::cos(th)),
                                    bloch_dir(r * std::cos(th), 0.0, -r * std::sin(th))};
    };
    return ParametricModel("qubit_r_theta", 2, 2, state, grads);
}

ParametricModel qubit_bloch_spherical() {
    auto state = [](const RVector& t) {
        check_radius("qubit_bloch_spherical", t(0));
        check_polar("qubit_bloch_spherical", t(1));
        const double r = t(0), th = t(1), ph = t(2);
        return bloch(r * std::sin(th) * std::cos(ph), r * std::sin(th) * std::sin(ph), r * std::cos(th));
    };
    auto grads = [](const RVector& t) {
        check_radius("qubit_bloch_spherical", t(0));
        check_polar("qubit_bloch_spherical", t(1));
        const double r = t(0), th = t(1), ph = t(2);
        const double st = std::sin(th), ct = std::cos(th), sp = std::sin(ph), cp = std::cos(ph);
        return std::vector<CMatrix>{bloch_dir(st * cp, st * sp, ct), bloch_dir(r * ct * cp, r * ct * sp, -r * st),
                                    bloch_dir(-r * st * sp, r * st * cp, 0.0)};
    };
    return ParametricModel("qubit_bloch_spherical", 3, 2, state, grads);
}

ParametricModel qubit_bloch_cartesian() {
    auto state = [](const RVector& t) {
        check_radius("qubit_bloch_cartesian", t.norm());
        return bloch(t(0), t(1), t(2));
    };
    auto grads = [](const RVector& t) {
        check_radius("qubit_bloch_cartesian", t.norm());
        return std::vector<CMatrix>{bloch_dir(1, 0, 0), bloch_dir(0, 1, 0), bloch_dir(0, 0, 1)};
    };
    return ParametricModel("qubit_bloch_cartesian", 3, 2, state, grads);
}

ParametricModel qubit_phase(double r) {
    check_radius("qubit_phase", r);
    auto state = [r](const RVector& t) { return bloch(r * std::cos(t(0)), r * std::sin(t(0)), 0.0); };
    auto grads = [r](const RVector& t) {
        return std::vector<CMatrix>{bloch_dir(-r * std::sin(t(0)), r * std::cos(t(0)), 0.0)};
    };
    return ParametricModel("qubit_phase", 1, 2, state, grads);
}

std::vector<std::string> builtin_model_names() {
    return {"pure_qubit", "qubit_r_theta", "qubit_bloch_spherical", "qubit_bloch_cartesian"};
}

ParametricModel builtin_model(std::string_view name) {
    if (name == "pure_qubit") return pure_qubit();
    if (name == "qubit_r_theta") return qubit_r_theta();
    if (name == "qubit_bloch_spherical") return qubit_bloch_spherical();
    if (name == "qubit_bloch_cartesian") return qubit_bloch_cartesian();
    throw_validation("builtin_model", "unknown builtin model '" + std::string(name) + "'");
}

ParametricModel multi_copy(const ParametricModel& m, int n, Eigen::Index cap) {
    if (n < 1) throw_validation("multi_copy", "copy count must be at least 1, got " + std::to_string(n));
    Eigen::Index dim = 1;
    for (int k = 0; k < n; ++k) {
        dim *= m.dim();
        if (dim > cap) {
            throw_validation("multi_copy", "size error: dimension " + std::to_string(m.dim()) + "^" +
                                               std::to_string(n) + " exceeds the cap " + std::to_string(cap));
        }
    }
    if (n == 1) return m;

    const auto base_state = m.state_fn();
    auto state = [base_state, n](const RVector& t) {
        const CMatrix rho = base_state(t);
        CMatrix out = rho;
        for (int k = 1; k < n; ++k) out = kron(out, rho);
        return out;
    };
    // Leibniz rule: sum over the slot that carries the derivative.
    auto grads = [m, base_state, n](const RVector& t) {
        const CMatrix rho = base_state(t);
        const std::vector<HermMatrix> d = m.gradient(t);
        std::vector<CMatrix> out;
        out.reserve(d.size());
        for (const HermMatrix& di : d) {
            CMatrix acc;
            for (int slot = 0; slot < n; ++slot) {
                CMatrix term = slot == 0 ? di.matrix() : rho;
                for (int k = 1; k < n; ++k) term = kron(term, k == slot ? di.matrix() : rho);
                acc = slot == 0 ? term : CMatrix(acc + term);
            }
            out.push_back(acc);
        }
        return out;
    };
    return ParametricModel(m.name() + "^" + std::to_string(n), m.param_count(), dim, state, grads, m.step());
}

namespace {

RMatrix checked_inverse(const RMatrix& jac, const char* where) {
    if (jac.rows() != jac.cols()) throw_validation(where, "Jacobian must be square");
    double det = jac.determinant();
    if (!(std::abs(det) > 1e-12)) {
        throw_validation(where, "invertibility: |det J| = " + fmt(std::abs(det)) + " <= 1e-12");
    }
    return jac.inverse();
}

}  // namespace

ModelPoint reparametrize(const ModelPoint& pt, const RMatrix& jacobian) {
    if (jacobian.rows() != pt.param_count()) {
        throw_validation("reparametrize", "Jacobian size does not match the parameter count");
    }
    const RMatrix m = checked_inverse(jacobian, "reparametrize").transpose();
    std::vector<HermMatrix> grads;
    grads.reserve(pt.grads.size());
    for (int i = 0; i < pt.param_count(); ++i) {
        CMatrix acc = CMatrix::Zero(pt.dim(), pt.dim());
        for (int k = 0; k < pt.param_count(); ++k) acc += m(i, k) * pt.grads[k].matrix();
        grads.push_back(HermMatrix::hermitian_part(acc));
    }
    return ModelPoint{pt.rho, std::move(grads), pt.theta};
}

CostMatrix pull_back_cost(const CostMatrix& c, const RMatrix& jacobian) {
    checked_inverse(jacobian, "pull_back_cost");
    if (jacobian.rows() != c.size()) throw_validation("pull_back_cost", "Jacobian size does not match the cost");
    return CostMatrix(RMatrix(jacobian.transpose() * c.matrix() * jacobian));
}

}  // namespace holevo
