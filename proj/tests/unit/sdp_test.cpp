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

#include "holevo/sdp.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "holevo/error.hpp"
#include "oracles.hpp"

namespace holevo {
namespace {

using oracle::Rng;

TEST(Sdp, PlantedProblemsSatisfyDualityAndBracketing) {
    Rng rng(11);
    for (int k = 0; k < 60; ++k) {
        const oracle::PlantedSdp ps = oracle::random_planted_sdp(rng);
        const SdpSolution sol = solve(ps.problem);
        ASSERT_TRUE(sol.optimal()) << "problem " << k << ": " << status_name(sol.status);
        const double scale = 1.0 + std::abs(sol.primal_value);
        EXPECT_LE(sol.gap, 1e-8 * scale);
        EXPECT_LE(sol.primal_infeasibility, 1e-9);
        EXPECT_LE(sol.dual_infeasibility, 1e-9);
        // The planted pair brackets the optimum.
        EXPECT_LE(sol.primal_value, ps.upper + 1e-8 * scale);
        EXPECT_GE(sol.dual_value, ps.lower - 1e-8 * scale);
        EXPECT_GE(oracle::block_min_eig(sol.x), -1e-10);
        EXPECT_GE(oracle::block_min_eig(sol.z), -1e-10);
        EXPECT_LE(std::abs(oracle::block_inner(sol.x, sol.z)), 1e-7 * scale);
    }
}

TEST(Sdp, UnitTraceGivesSmallestEigenvalue) {
    Rng rng(12);
    for (int n = 1; n <= 6; ++n) {
        RMatrix g = oracle::random_real(n, n, rng);
        const RMatrix c = 0.5 * (g + g.transpose());
        SdpProblem p;
        p.blocks = {n};
        p.c = {c};
        p.constraints.push_back({{RMatrix::Identity(n, n)}, 1.0});
        const SdpSolution sol = solve(p);
        ASSERT_TRUE(sol.optimal());
        Eigen::SelfAdjointEigenSolver<RMatrix> es(c);
        EXPECT_NEAR(sol.primal_value, es.eigenvalues()(0), 1e-7);
        EXPECT_NEAR(sol.y(0), es.eigenvalues()(0), 1e-7);
    }
}

TEST(Sdp, DiagonalBlocksActAsLinearProgram) {
    // minimize 3 x1 + x2 + 2 x3 with x1 + x2 + x3 = 1 and x2 <= 0.25 by a slack.
    SdpProblem p;
    p.blocks = {1, 1, 1, 1};
    auto scalar = [](double v) { return RMatrix::Constant(1, 1, v); };
    p.c = {scalar(3.0), scalar(1.0), scalar(2.0), scalar(0.0)};
    p.constraints.push_back({{scalar(1), scalar(1), scalar(1), scalar(0)}, 1.0});
    p.constraints.push_back({{scalar(0), scalar(1), scalar(0), scalar(1)}, 0.25});
    const SdpSolution sol = solve(p);
    ASSERT_TRUE(sol.optimal());
    EXPECT_NEAR(sol.primal_value, 0.25 + 2.0 * 0.75, 1e-7);
}

TEST(Sdp, InfeasibleProblemReportsStatusWithoutThrowing) {
    SdpProblem p;
    p.blocks = {2};
    p.c = {RMatrix::Identity(2, 2)};
    p.constraints.push_back({{RMatrix::Identity(2, 2)}, -1.0});
    SdpSolution sol;
    ASSERT_NO_THROW(sol = solve(p));
    EXPECT_FALSE(sol.optimal());
}

TEST(Sdp, ValidationRejectsMalformedData) {
    SdpProblem p;
    p.blocks = {2};
    p.c = {RMatrix::Identity(3, 3)};
    EXPECT_THROW(p.validate(), Error);

    p.c = {RMatrix::Identity(2, 2)};
    RMatrix asym = RMatrix::Zero(2, 2);
    asym(0, 1) = 1.0;
    p.constraints.push_back({{asym}, 0.0});
    EXPECT_THROW(solve(p), Error);
}

TEST(Sdp, ComplexEmbeddingDoublesTheSpectrum) {
    Rng rng(13);
    const CMatrix g = oracle::random_complex(3, 3, rng);
    const CMatrix h = 0.5 * (g + g.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> ec(h);
    Eigen::SelfAdjointEigenSolver<RMatrix> er(complex_psd_embed(h));
    for (int k = 0; k < 3; ++k) {
        EXPECT_NEAR(er.eigenvalues()(2 * k), ec.eigenvalues()(k), 1e-13);
        EXPECT_NEAR(er.eigenvalues()(2 * k + 1), ec.eigenvalues()(k), 1e-13);
    }
}

TEST(Sdp, WriteProblemListsBlocksAndConstraints) {
    SdpProblem p;
    p.blocks = {1, 2};
    p.c = {RMatrix::Constant(1, 1, 1.0), RMatrix::Identity(2, 2)};
    p.constraints.push_back({{RMatrix::Constant(1, 1, 1.0), RMatrix::Zero(2, 2)}, 0.5});
    std::ostringstream os;
    write_problem(os, p);
    const std::string text = os.str();
    EXPECT_EQ(text.rfind("blocks 1 2\nconstraints 1\n", 0), 0u) << text;
    EXPECT_NE(text.find("A 0 b 0.5\n"), std::string::npos) << text;
}

}  // namespace
}  // namespace holevo
