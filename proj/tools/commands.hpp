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

// Computations behind the holevo subcommands, kept out of main.cpp so the
// acceptance suite can call them directly.

#ifndef HOLEVO_TOOLS_COMMANDS_HPP
#define HOLEVO_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "holevo/sim.hpp"

namespace holevo::cli {

struct Table1Column {
    std::string family;  // "qubit" or "Gaussian"
    std::string name;
    double sld = 0.0;
    double hcr = 0.0;
    double expected_sld = 0.0;
    double expected_hcr = 0.0;
    bool incompatible = false;          // HCR - SLD > tolerance
    bool collective_advantage = false;  // HGM - HCR > tolerance (qubits only)
};

struct Table1 {
    double r = 0.5;
    std::vector<Table1Column> columns;  // qubit columns first, then Gaussian, same order
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Table of SLD and Holevo values for the three qubit models (through the
/// SDP) and their Gaussian counterparts (closed form) at Euclidean cost
/// c(r) = 1. Every value is compared with its closed form and every qubit
/// column with its Gaussian partner at tolerance `tol`.
Table1 compute_table1(double r, double tol = 1e-6);

std::string render_table1(const Table1& t);

/// HGM, HCR and SLD for the three-parameter Bloch model with identity cost.
std::vector<CurveRow> figure2_rows(const std::vector<double>& r_grid);

/// (r, theta) model with c(r) = 1: HCR (= SLD), HGM and the simulated
/// collective cost for n = 2, 4, 8.
std::vector<CurveRow> figure1_rows(const std::vector<double>& r_grid, long long trials, std::uint64_t seed);

}  // namespace holevo::cli

#endif  // HOLEVO_TOOLS_COMMANDS_HPP
