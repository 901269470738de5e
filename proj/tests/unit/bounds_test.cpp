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

// Point bounds on qubit families with hand-derived values, plus structural
// properties of the Holevo minimizer on random models.

#include "holevo/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "holevo/error.hpp"
#include "holevo/hcr.hpp"
#include "holevo/model.hpp"
#include "oracles.hpp"

namespace holevo {
namespace {

using oracle::Rng;
constexpr double kPi = std::numbers::pi;

RVector v2(double a, double b) { return Eigen::Vector2d(a, b); }
RVector v3(double a, double b, double c) { return Eigen::Vector3d(a, b, c); }

TEST(Model, RejectsInvalidPoints) {
    const HermMatrix half = HermMatrix::identity(2) * 0.5;
    EXPECT_THROW(ModelPoint::make(HermMatrix::identity(2), {pauli(3)}), Error);
    EXPECT_THROW(ModelPoint::make(half, {HermMatrix::identity(2)}), Error);
    EXPECT_THROW(ModelPoint::make(half + pauli(3), {pauli(1)}), Error);
    EXPECT_NO_THROW(ModelPoint::make(half, {pauli(1), pauli(3)}));
}

TEST(Model, CostMatrixValidation) {
    RMatrix asym = RMatrix::Identity(2, 2);
    asym(0, 1) = 0.5;
    EXPECT_THROW(CostMatrix{asym}, Error);
    EXPECT_THROW(CostMatrix::diagonal(v2(1.0, -0.5)), Error);
    EXPECT_EQ(CostMatrix::outer(v3(1.0, 2.0, 0.0)).rank(), 1);
    EXPECT_EQ(CostMatrix::identity(3).rank(), 3);
}

TEST(Model, BuiltinLookup) {
    for (const std::string& name : builtin_model_names()) EXPECT_EQ(builtin_model(name).name(), name);
    EXPECT_THROW(builtin_model("qutrit_magic"), Error);
    EXPECT_THROW(qubit_r_theta().evaluate(v2(1.2, 0.0)), Error);
}

TEST(Model, MultiCopyCapAndAdditiveFisher) {
    const RVector th = v2(0.4, 0.9);
    const RMatrix f1 = sld_set(qubit_r_theta().evaluate(th)).qfi;
    const RMatrix f3 = sld_set(multi_copy(qubit_r_theta(), 3).evaluate(th)).qfi;
    EXPECT_LT((f3 - 3.0 * f1).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_THROW(multi_copy(qubit_r_theta(), 9, 256), Error);
}

TEST(Sld, QubitFisherClosedForms) {
    // Bloch vector coordinates: F = I + r r^T / (1 - r^2).
    const RVector r = v3(0.3, -0.2, 0.5);
    const SldSet cart = sld_set(qubit_bloch_cartesian().evaluate(r));
    const RMatrix expected = RMatrix::Identity(3, 3) + r * r.transpose() / (1.0 - r.squaredNorm());
    EXPECT_LT((cart.qfi - expected).cwiseAbs().maxCoeff(), 1e-12);

    // Pure state on the sphere: F = diag(1, sin^2 theta).
    const double th = 1.1;
    const SldSet pure = sld_set(pure_qubit().evaluate(v2(th, 0.4)));
    EXPECT_NEAR(pure.qfi(0, 0), 1.0, 1e-12);
    EXPECT_NEAR(pure.qfi(1, 1), std::sin(th) * std::sin(th), 1e-12);
    EXPECT_NEAR(pure.qfi(0, 1), 0.0, 1e-12);
    // tr(rho [L_theta, L_phi]) = 2i sin(theta)
    EXPECT_NEAR(std::abs(pure.mean_commutators(0, 1)), 2.0 * std::sin(th), 1e-12);
    EXPECT_NEAR(pure.mean_commutators(0, 1).real(), 0.0, 1e-14);
    EXPECT_NEAR((pure.mean_commutators + pure.mean_commutators.transpose()).cwiseAbs().maxCoeff(), 0.0, 1e-14);
}

TEST(Sld, UnidentifiableCostIsRejected) {
    const HermMatrix half = HermMatrix::identity(2) * 0.5;
    const ModelPoint pt = ModelPoint::make(half, {pauli(3) * 0.5, pauli(3) * 0.5});
    EXPECT_THROW(sld_cr_bound(sld_set(pt), CostMatrix::identity(2)), Error);
    // A cost that ignores the unidentifiable difference is fine.
    EXPECT_NO_THROW(sld_cr_bound(sld_set(pt), CostMatrix::outer(v2(1.0, 1.0))));
}

TEST(Sld, NumericGradientsGiveTheSameFisher) {
    const RVector th = v3(0.6, 1.0, 0.3);
    const RMatrix fa = sld_set(qubit_bloch_spherical().evaluate(th)).qfi;
    const RMatrix fn = sld_set(qubit_bloch_spherical().numeric_only().evaluate(th)).qfi;
    EXPECT_LT((fa - fn).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Reparametrize, DoublingAParameterQuadruplesItsBound) {
    const ModelPoint pt = qubit_phase(0.6).evaluate(RVector::Constant(1, 0.2));
    const RMatrix jac = RMatrix::Constant(1, 1, 2.0);  // theta' = 2 theta
    const ModelPoint scaled = reparametrize(pt, jac);
    const CostMatrix c = CostMatrix::identity(1);
    EXPECT_NEAR(sld_cr_bound(sld_set(scaled), c), 4.0 * sld_cr_bound(sld_set(pt), c), 1e-12);
    // Pulling a cost back through the Jacobian gives the original-coordinate bound.
    EXPECT_NEAR(sld_cr_bound(sld_set(pt), pull_back_cost(c, jac)), sld_cr_bound(sld_set(scaled), c), 1e-12);
}

TEST(Rld, DInvariantQubitAndPureStateRefusal) {
    const ModelPoint pt = qubit_bloch_cartesian().evaluate(v3(0.1, 0.4, -0.3));
    const CostMatrix c = CostMatrix::identity(3);
    EXPECT_NEAR(rld_bound(pt, c), hcr_bound(pt, c).value, 1e-7);
    EXPECT_THROW(rld_bound(pure_qubit().evaluate(v2(1.0, 0.0)), CostMatrix::identity(2)), Error);

    // Direct evaluation of (F_R)_ij = tr(d_i rho rho^{-1} d_j rho).
    const CMatrix inv = pt.rho.matrix().inverse();
    const CMatrix fr = rld_fisher(pt);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const cplx e = (pt.grads[i].matrix() * inv * pt.grads[j].matrix()).trace();
            EXPECT_NEAR(std::abs(fr(i, j) - e), 0.0, 1e-12);
        }
}

TEST(DInvariance, SuperoperatorIdentityAndQubitCases) {
    Rng rng(21);
    const HermMatrix rho = oracle::random_density(3, rng);
    const HermMatrix x = oracle::random_traceless(3, rng);
    const HermMatrix dx = apply_d(rho, x);
    const CMatrix lhs = dx.matrix() * rho.matrix() + rho.matrix() * dx.matrix();
    const CMatrix rhs = cplx(0.0, 1.0) * (x.matrix() * rho.matrix() - rho.matrix() * x.matrix());
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-13);
    // Im tr(rho X Y) = Re tr(rho D(X) Y).
    const HermMatrix y = oracle::random_traceless(3, rng);
    EXPECT_NEAR((rho.matrix() * x.matrix() * y.matrix()).trace().imag(),
                (rho.matrix() * dx.matrix() * y.matrix()).trace().real(), 1e-14);

    EXPECT_TRUE(d_invariance_check(qubit_bloch_cartesian().evaluate(v3(0.2, 0.1, 0.5))).invariant);
    const DInvariance two = d_invariance_check(qubit_r_theta().evaluate(v2(0.5, 0.7)));
    EXPECT_FALSE(two.invariant);
    EXPECT_EQ(two.span_dim, 2);
    EXPECT_EQ(two.basis.size(), 3u);
}

TEST(Hgm, ClosedFormForTheRadialAngularModel) {
    // Euclidean cost on (r, theta): HGM = (1 + sqrt(1 - r^2))^2 while HCR = SLD = 2 - r^2.
    for (double r : {0.1, 0.5, 0.9}) {
        const ModelPoint pt = qubit_r_theta().evaluate(v2(r, 0.3));
        const CostMatrix c = CostMatrix::diagonal(v2(1.0, r * r));
        const double root = 1.0 + std::sqrt(1.0 - r * r);
        EXPECT_NEAR(hgm_bound(sld_set(pt), c), root * root, 1e-12);
        EXPECT_NEAR(hcr_bound(pt, c).value, 2.0 - r * r, 1e-8);
    }
}

TEST(Hgm, BoundsHolevoFromAboveOnRandomQubits) {
    Rng rng(22);
    for (int k = 0; k < 40; ++k) {
        const int p = 2 + k % 2;
        const ModelPoint pt = oracle::random_model_point(2, p, rng);
        const CostMatrix c(oracle::random_psd(p, rng));
        EXPECT_GE(hgm_bound(sld_set(pt), c), hcr_bound(pt, c).value - 1e-8);
    }
}

TEST(Compatibility, Reports) {
    const SldSet s = sld_set(qubit_r_theta().evaluate(v2(0.5, 0.0)));
    const CompatibilityReport rep = compatibility_report(s, CostMatrix::identity(2));
    EXPECT_TRUE(rep.commutators_vanish);
    EXPECT_TRUE(rep.predicts_hcr_equals_sld);

    const SldSet p = sld_set(pure_qubit().evaluate(v2(kPi / 2, 0.0)));
    EXPECT_FALSE(compatibility_report(p, CostMatrix::identity(2)).predicts_hcr_equals_sld);
    EXPECT_TRUE(compatibility_report(p, CostMatrix::outer(v2(1.0, 2.0))).predicts_hcr_equals_sld);
}

TEST(Hcr, MinimizerIsLocallyUnbiasedAndVDominatesZ) {
    Rng rng(23);
    for (int k = 0; k < 30; ++k) {
        const int d = 2 + k % 3;
        const int p = 1 + k % 3;
        const ModelPoint pt = oracle::random_model_point(d, p, rng);
        const CostMatrix c(oracle::random_psd(p, rng));
        const HcrSolution h = hcr_bound(pt, c);
        for (int i = 0; i < p; ++i) {
            EXPECT_NEAR((pt.rho.matrix() * h.x_ops[i].matrix()).trace().real(), 0.0, 1e-10);
            for (int j = 0; j < p; ++j)
                EXPECT_NEAR((pt.grads[i].matrix() * h.x_ops[j].matrix()).trace().real(), i == j ? 1.0 : 0.0, 1e-9);
        }
        const CMatrix gap = h.v_matrix.cast<cplx>() - h.z_matrix;
        Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (gap + gap.adjoint()));
        EXPECT_GE(es.eigenvalues().minCoeff(), -1e-9);
        ASSERT_TRUE(h.v_attains_value);
        EXPECT_NEAR((c.matrix() * h.v_matrix).trace(), h.value, 1e-9 * (1.0 + h.value));
        EXPECT_NEAR(h.value, h.lower, 1e-7 * (1.0 + h.value));
        EXPECT_NEAR(evaluate_candidate(pt, h.x_ops, c), h.value, 1e-12 * (1.0 + h.value));
    }
}

TEST(Hcr, SingularCostBetweenSldAndTwiceSld) {
    Rng rng(24);
    for (int k = 0; k < 20; ++k) {
        const ModelPoint pt = oracle::random_model_point(3, 3, rng);
        const RMatrix g = oracle::random_real(3, 2, rng);
        const CostMatrix c(g * g.transpose());
        const double sld = sld_cr_bound(sld_set(pt), c);
        const HcrSolution h = hcr_bound(pt, c);
        EXPECT_FALSE(h.v_attains_value);
        EXPECT_GE(h.value, sld - 1e-9);
        EXPECT_LE(h.value, 2.0 * sld + 1e-7);
    }
}

TEST(Hcr, CandidateValidationAndDependentGradients) {
    const ModelPoint pt = qubit_r_theta().evaluate(v2(0.5, 0.0));
    EXPECT_THROW(evaluate_candidate(pt, {pauli(3), pauli(1)}, CostMatrix::identity(2)), Error);
    const HermMatrix half = HermMatrix::identity(2) * 0.5;
    const ModelPoint dep = ModelPoint::make(half, {pauli(3) * 0.5, pauli(3)});
    EXPECT_THROW(hcr_bound(dep, CostMatrix::identity(2)), Error);
}

TEST(Hcr, ReportCollectsEveryApplicableBound) {
    const BoundReport rep = bound_report(qubit_bloch_spherical().evaluate(v3(0.5, kPi / 2, 0.0)),
                                         CostMatrix::diagonal(v3(1.0, 0.25, 0.25)));
    ASSERT_TRUE(rep.sld && rep.rld && rep.hgm && rep.hcr);
    EXPECT_NEAR(*rep.sld, 2.75, 1e-10);  // (1 - r^2) + 1 + 1
    EXPECT_NEAR(*rep.hcr, *rep.rld, 1e-7);
    EXPECT_GT(*rep.hcr, *rep.sld + 0.1);
    EXPECT_GE(*rep.hgm, *rep.hcr - 1e-8);

    const BoundReport pure = bound_report(pure_qubit().evaluate(v2(1.0, 0.0)), CostMatrix::identity(2));
    EXPECT_FALSE(pure.rld.has_value());
    EXPECT_EQ(pure.notes.count("rld"), 1u);
}

}  // namespace
}  // namespace holevo
