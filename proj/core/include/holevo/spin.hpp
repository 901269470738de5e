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

#ifndef HOLEVO_SPIN_HPP
#define HOLEVO_SPIN_HPP

#include <vector>

#include "holevo/matrix.hpp"

namespace holevo {

// Spins are indexed by two_j = 2j so half-integers stay exact. Basis vectors
// of a spin-j space are ordered m = j, j - 1, ..., -j.

struct SpinOperators {
    CMatrix jx;
    CMatrix jy;
    CMatrix jz;
};

SpinOperators spin_operators(int two_j);

/// exp(-i angle J_y) on spin j.
CMatrix wigner_rotation_y(int two_j, double angle);

/// log m_j, m_j = binom(n, n/2 - j) (2j + 1) / (n/2 + j + 1): the number of
/// copies of spin j in n qubits.
double log_multiplicity(int n, int two_j);

/// log p_{n,j}(r), the weight of spin j in rho^{(x)n} for a qubit with Bloch length r.
double spin_log_weight(int n, int two_j, double r);

/// d/dr log p_{n,j}(r), for 0 <= r < 1.
double spin_log_weight_derivative(int n, int two_j, double r);

/// Mean of m under weights proportional to exp(m u), m = -j..j.
double spin_mean_m(int two_j, double u);

struct SpinWeight {
    int two_j = 0;
    double log_weight = 0.0;
    double weight = 0.0;
};

/// All p_{n,j}(r), j descending from n/2. Valid for n <= 10^4.
std::vector<SpinWeight> spin_weights(int n, double r);

/// One irreducible block of rho^{(x)n}, normalized to unit trace.
struct SpinBlockState {
    int n = 0;
    int two_j = 0;
    HermMatrix block;
    double weight = 0.0;

    double j() const { return 0.5 * two_j; }
};

/// Block decomposition of the n-copy state of the qubit with Bloch vector
/// r (sin theta, 0, cos theta). Dense blocks are built only up to n = `max_n`.
std::vector<SpinBlockState> spin_blocks(int n, double r, double theta, int max_n = 200);

}  // namespace holevo

#endif  // HOLEVO_SPIN_HPP
