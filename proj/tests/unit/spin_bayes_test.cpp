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

// Spin-block weights and the Bayesian routines. The covariant qubit cost is
// checked against a direct integration over the outcome sphere: the block
// populations come from dense projections of rho^{(x)n}, and the outcome
// density uses |d^j_{m,j}(beta)|^2.

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "holevo/bayes.hpp"
#include "holevo/error.hpp"
#include "holevo/spin.hpp"
#include "oracles.hpp"

namespace holevo {
namespace {

constexpr double kPi = std::numbers::pi;

double simpson(const std::function<double(double)>& f, double a, double b, int intervals = 2000) {
    const double h = (b - a) / intervals;
    double s = f(a) + f(b);
    for (int k = 1; k < intervals; ++k) s += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
    return s * h / 3.0;
}

double golden_max(const std::function<double(double)>& f, double lo, double hi) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
        const double c = b - g * (b - a), d = a + g * (b - a);
        if (f(c) > f(d))
            b = d;
        else
            a = c;
    }
    return f(0.5 * (a + b));
}

double binomial(int n, int k) {
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

TEST(Spin, TwoQubitWeights) {
    const double r = 0.6;
    const auto w = spin_weights(2, r);
    ASSERT_EQ(w.size(), 2u);
    EXPECT_EQ(w[0].two_j, 2);
    EXPECT_NEAR(w[0].weight, (3.0 + r * r) / 4.0, 1e-14);
    EXPECT_NEAR(w[1].weight, (1.0 - r * r) / 4.0, 1e-14);
}

TEST(Spin, WeightsNormalizedForLargeN) {
    for (double r : {0.0, 0.3, 0.99, 1.0}) {
        double total = 0.0;
        for (const SpinWeight& w : spin_weights(5000, r)) total += w.weight;
        EXPECT_NEAR(total, 1.0, 1e-10) << "r = " << r;
    }
    EXPECT_THROW(spin_weights(10001, 0.5), Error);
    EXPECT_THROW(spin_log_weight(4, 3, 0.5), Error);
}

TEST(Spin, LogWeightDerivativeMatchesFiniteDifference) {
    const double h = 1e-5;
    for (int two_j : {0, 2, 6, 10}) {
        for (double r : {0.2, 0.55, 0.9}) {
            const double fd = (spin_log_weight(10, two_j, r + h) - spin_log_weight(10, two_j, r - h)) / (2.0 * h);
            EXPECT_NEAR(spin_log_weight_derivative(10, two_j, r), fd, 1e-7 * (1.0 + std::abs(fd)));
        }
    }
}

TEST(Spin, OperatorsMatchLadderConstruction) {
    for (int two_j = 0; two_j <= 5; ++two_j) {
        const SpinOperators s = spin_operators(two_j);
        const oracle::DenseSpin o = oracle::spin_j_operators(two_j);
        EXPECT_LT((s.jx - o.jx).cwiseAbs().maxCoeff(), 1e-14);
        EXPECT_LT((s.jy - o.jy).cwiseAbs().maxCoeff(), 1e-14);
        EXPECT_LT((s.jz - o.jz).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(Spin, WignerRotationColumnAndGroupLaw) {
    const double beta = 0.8;
    for (int two_j = 1; two_j <= 6; ++two_j) {
        const CMatrix d = wigner_rotation_y(two_j, beta);
        // Column for m' = j: |d^j_{m,j}|^2 = C(2j, j+m) cos^{2(j+m)}(beta/2) sin^{2(j-m)}(beta/2).
        for (int k = 0; k <= two_j; ++k) {
            const int j_plus_m = two_j - k;
            const double expected = binomial(two_j, j_plus_m) * std::pow(std::cos(beta / 2), 2 * j_plus_m) *
                                    std::pow(std::sin(beta / 2), 2 * k);
            EXPECT_NEAR(std::norm(d(k, 0)), expected, 1e-13);
        }
        const CMatrix prod = wigner_rotation_y(two_j, 0.3) * wigner_rotation_y(two_j, 0.5);
        EXPECT_LT((prod - d).cwiseAbs().maxCoeff(), 1e-13);
    }
}

TEST(Bayes, TwoPointPriorBeatsEveryProjectiveMeasurement) {
    const ParametricModel m = qubit_phase(0.8);
    const Prior prior =
        discrete_prior({RVector::Constant(1, 0.2), RVector::Constant(1, 1.1)}, Eigen::Vector2d(0.3, 0.7));
    const BayesSingleResult res = bayes_optimal_single(m, prior);

    // Brute force: projective qubit measurement along (a, b) followed by the posterior mean.
    const HermMatrix r0 = m.state(prior.nodes[0]), r1 = m.state(prior.nodes[1]);
    const double t0 = 0.2, t1 = 1.1, w0 = 0.3, w1 = 0.7;
    auto cost = [&](double a, double b) {
        const CMatrix proj = 0.5 * (CMatrix::Identity(2, 2) + std::sin(a) * std::cos(b) * pauli(1).matrix() +
                                    std::sin(a) * std::sin(b) * pauli(2).matrix() + std::cos(a) * pauli(3).matrix());
        double total = w0 * t0 * t0 + w1 * t1 * t1;
        for (int outcome = 0; outcome < 2; ++outcome) {
            const CMatrix e = outcome == 0 ? proj : CMatrix(CMatrix::Identity(2, 2) - proj);
            const double p0 = (e * r0.matrix()).trace().real(), p1 = (e * r1.matrix()).trace().real();
            const double px = w0 * p0 + w1 * p1;
            if (px > 1e-15) total -= std::pow(w0 * t0 * p0 + w1 * t1 * p1, 2) / px;
        }
        return total;
    };
    double best = 1e9, ba = 0, bb = 0;
    for (int i = 0; i <= 200; ++i)
        for (int k = 0; k < 400; ++k) {
            const double a = kPi * i / 200, b = 2 * kPi * k / 400, v = cost(a, b);
            if (v < best) best = v, ba = a, bb = b;
        }
    for (double step = 0.01; step > 1e-10; step *= 0.5)
        for (bool moved = true; moved;) {
            moved = false;
            for (auto [da, db] : {std::pair{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}}) {
                const double v = cost(ba + da, bb + db);
                if (v < best) best = v, ba += da, bb += db, moved = true;
            }
        }
    EXPECT_NEAR(res.cost, best, 1e-10);
}

TEST(Bayes, VanTreesOnThePhaseFamily) {
    const double r = 0.7, sigma = 0.4;
    const ParametricModel m = qubit_phase(r);
    EXPECT_THROW(van_trees_bound(m, uniform_prior(0.0, 1.0), CostMatrix::identity(1)), Error);
    const Prior g = gaussian_prior(RVector::Constant(1, 0.5), RMatrix::Constant(1, 1, sigma * sigma));
    EXPECT_NEAR(van_trees_bound(m, g, CostMatrix::identity(1)), 1.0 / (r * r + 1.0 / (sigma * sigma)), 1e-8);
}

TEST(Bayes, CovariantPureCostMatchesFidelityIntegral) {
    for (int n : {1, 2, 5, 20}) {
        const double fid = simpson([n](double t) { return (n + 1.0) * std::pow(t, n + 1); }, 0.0, 1.0, 20000);
        EXPECT_NEAR(covariant_pure_qubit_cost(n), 4.0 * (1.0 - fid), 1e-12);
    }
}

TEST(Bayes, CovariantMixedCostMatchesOutcomeSphereIntegration) {
    // Uniform radial density; Bloch vector along +z by covariance.
    for (int n = 1; n <= 6; ++n) {
        const oracle::DenseSpin spin = oracle::dense_total_spin(n);
        double overlap = 0.0;
        for (int two_j = n; two_j >= 0; two_j -= 2) {
            const CMatrix pj = oracle::j2_projector(spin, two_j);
            const double j = 0.5 * two_j;
            // Population of (j, m) at radius r, from the diagonal of P_j Pi_m rho^{(x)n}.
            auto population = [&](double r, double m) {
                CMatrix rho = CMatrix::Zero(2, 2);
                rho(0, 0) = 0.5 * (1.0 + r);
                rho(1, 1) = 0.5 * (1.0 - r);
                const CMatrix big = oracle::tensor_power(rho, n);
                double s = 0.0;
                for (Eigen::Index x = 0; x < big.rows(); ++x)
                    if (std::abs(spin.jz(x, x).real() - m) < 1e-9) s += (pj(x, x) * big(x, x)).real();
                return s;
            };
            // Expected cos(beta) of the covariant outcome given (j, m).
            auto mean_cos = [&](double m) {
                const int jm = static_cast<int>(std::lround(j + m));
                return simpson(
                    [&](double beta) {
                        const double d2 = binomial(two_j, jm) * std::pow(std::cos(beta / 2), 2 * jm) *
                                          std::pow(std::sin(beta / 2), 2 * (two_j - jm));
                        return 0.5 * (two_j + 1.0) * d2 * std::cos(beta) * std::sin(beta);
                    },
                    0.0, kPi, 400);
            };
            // r = sin t removes the square-root edge at r = 1.
            double a = 0.0, b = 0.0;
            a = simpson(
                [&](double t) {
                    const double r = std::sin(t);
                    double s = 0.0;
                    for (int k = 0; k <= two_j; ++k) s += population(r, j - k) * mean_cos(j - k);
                    return r * s * std::cos(t);
                },
                0.0, kPi / 2, 200);
            b = simpson(
                [&](double t) {
                    const double r = std::sin(t);
                    double p = 0.0;
                    for (int k = 0; k <= two_j; ++k) p += population(r, j - k);
                    return p * std::cos(t) * std::cos(t);
                },
                0.0, kPi / 2, 200);
            overlap += golden_max([&](double phi) { return a * std::sin(phi) + b * std::cos(phi); }, 0.0, kPi / 2);
        }
        const double brute = 2.0 * (1.0 - overlap);
        const double exact = covariant_mixed_qubit_cost({n, [](double) { return 1.0; }, 128}).exact;
        EXPECT_NEAR(exact, brute, 1e-8) << "n = " << n;
    }
}

TEST(Bayes, CovariantMixedApproachesTheAsymptoteFromBelow) {
    double prev = 0.0;
    for (int n : {1, 2, 4, 8, 16, 32, 64, 128}) {
        const CovariantQubitCost c = covariant_mixed_qubit_cost({n, [](double) { return 1.0; }, 128});
        EXPECT_NEAR(n * c.asymptotic, 4.0, 1e-12);
        EXPECT_GT(n * c.exact, prev);
        EXPECT_LT(n * c.exact, 4.0);
        prev = n * c.exact;
    }
    EXPECT_THROW(covariant_mixed_qubit_cost({4, [](double) { return 2.0; }, 128}), Error);
    EXPECT_THROW(covariant_mixed_qubit_cost({4, [](double) { return 1.0; }, 16}), Error);
}

}  // namespace
}  // namespace holevo
