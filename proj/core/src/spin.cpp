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

#include "holevo/spin.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <string>

#include "holevo/error.hpp"

namespace holevo {

namespace {

constexpr int kMaxCopies = 10000;

void check_args(const char* where, int n, int two_j) {
    if (n < 1 || n > kMaxCopies) {
        throw_validation(where,
                         "copy count must be in [1, " + std::to_string(kMaxCopies) + "], got " + std::to_string(n));
    }
    if (two_j < 0 || two_j > n || (n - two_j) % 2 != 0) {
        throw_validation(where, "2j = " + std::to_string(two_j) + " is not a spin of " + std::to_string(n) + " qubits");
    }
}

void check_r(const char* where, double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw_validation(where, "Bloch length must lie in [0, 1]");
}

double bloch_u(double r) { return std::log1p(r) - std::log1p(-r); }

// log sum_{k=0}^{2j} exp(-k u), u >= 0.
double log_geometric(int two_j, double u) {
    if (u == 0.0) return std::log(two_j + 1.0);
    if (std::isinf(u)) return 0.0;
    return std::log(-std::expm1(-(two_j + 1.0) * u)) - std::log(-std::expm1(-u));
}

}  // namespace

SpinOperators spin_operators(int two_j) {
    if (two_j < 0) throw_validation("spin_operators", "2j must be non-negative");
    const int d = two_j + 1;
    const double j = 0.5 * two_j;
    SpinOperators s{CMatrix::Zero(d, d), CMatrix::Zero(d, d), CMatrix::Zero(d, d)};
    for (int k = 0; k < d; ++k) {
        const double m = j - k;
        s.jz(k, k) = m;
        if (k + 1 < d) {
            // <m | J_+ | m - 1>
            const double c = std::sqrt(j * (j + 1.0) - m * (m - 1.0));
            s.jx(k, k + 1) = 0.5 * c;
            s.jx(k + 1, k) = 0.5 * c;
            s.jy(k, k + 1) = cplx(0.0, -0.5 * c);
            s.jy(k + 1, k) = cplx(0.0, 0.5 * c);
        }
    }
    return s;
}

CMatrix wigner_rotation_y(int two_j, double angle) {
    const Spectrum sp = eig_hermitian(HermMatrix::hermitian_part(spin_operators(two_j).jy));
    CVector phase(sp.values.size());
    for (Eigen::Index k = 0; k < phase.size(); ++k) phase(k) = std::exp(cplx(0.0, -angle * sp.values(k)));
    return sp.vectors * phase.asDiagonal() * sp.vectors.adjoint();
}

double log_multiplicity(int n, int two_j) {
    check_args("log_multiplicity", n, two_j);
    const int lower = (n - two_j) / 2;  // n/2 - j
    const int upper = (n + two_j) / 2;  // n/2 + j
    return std::lgamma(n + 1.0) - std::lgamma(lower + 1.0) - std::lgamma(upper + 1.0) + std::log(two_j + 1.0) -
           std::log(upper + 1.0);
}

double spin_log_weight(int n, int two_j, double r) {
    check_args("spin_log_weight", n, two_j);
    check_r("spin_log_weight", r);
    const double lp = std::log1p(r) - std::log(2.0);
    const int upper = (n + two_j) / 2;
    const int lower = (n - two_j) / 2;
    double out = log_multiplicity(n, two_j) + upper * lp;
    if (lower > 0) {
        if (r == 1.0) return -std::numeric_limits<double>::infinity();
        out += lower * (std::log1p(-r) - std::log(2.0));
    }
    return out + log_geometric(two_j, r == 1.0 ? std::numeric_limits<double>::infinity() : bloch_u(r));
}

double spin_mean_m(int two_j, double u) {
    const double a = 0.5 * (two_j + 1.0);
    if (std::isinf(u)) return u > 0 ? 0.5 * two_j : -0.5 * two_j;
    const double au = a * std::abs(u);
    double mean;
    if (au < 0.05) {
        const double a2 = a * a;
        mean = u * (a2 - 0.25) / 3.0 - std::pow(u, 3) * (a2 * a2 - 1.0 / 16.0) / 45.0 +
               2.0 * std::pow(u, 5) * (a2 * a2 * a2 - 1.0 / 64.0) / 945.0;
    } else {
        mean = a / std::tanh(a * u) - 0.5 / std::tanh(0.5 * u);
    }
    return mean;
}

double spin_log_weight_derivative(int n, int two_j, double r) {
    check_args("spin_log_weight_derivative", n, two_j);
    if (!(r >= 0.0 && r < 1.0)) throw_validation("spin_log_weight_derivative", "needs 0 <= r < 1");
    const double j = 0.5 * two_j;
    const double half = 0.5 * n;
    const double mean_k = j - spin_mean_m(two_j, bloch_u(r));
    return (half + j) / (1.0 + r) - (half - j) / (1.0 - r) - 2.0 * mean_k / (1.0 - r * r);
}

std::vector<SpinWeight> spin_weights(int n, double r) {
    check_r("spin_weights", r);
    std::vector<SpinWeight> out;
    double total = 0.0;
    for (int two_j = n; two_j >= 0; two_j -= 2) {
        const double lw = spin_log_weight(n, two_j, r);
        if (std::isnan(lw)) throw_precision("spin_weights", "log weight is NaN at 2j = " + std::to_string(two_j));
        out.push_back({two_j, lw, std::exp(lw)});
        total += out.back().weight;
    }
    if (!(std::abs(total - 1.0) < 1e-9)) {
        throw_precision("spin_weights", "weights sum to " + std::to_string(total) + " instead of 1");
    }
    return out;
}

std::vector<SpinBlockState> spin_blocks(int n, double r, double theta, int max_n) {
    if (n > max_n) {
        throw_validation("spin_blocks",
                         "dense blocks are limited to n <= " + std::to_string(max_n) + ", got " + std::to_string(n));
    }
    const std::vector<SpinWeight> weights = spin_weights(n, r);
    const double u = r == 1.0 ? std::numeric_limits<double>::infinity() : bloch_u(r);
    std::vector<SpinBlockState> out;
    out.reserve(weights.size());
    for (const SpinWeight& w : weights) {
        const int d = w.two_j + 1;
        RVector diag(d);
        for (int k = 0; k < d; ++k) diag(k) = std::isinf(u) ? (k == 0 ? 1.0 : 0.0) : std::exp(-k * u);
        diag /= diag.sum();
        const CMatrix rot = wigner_rotation_y(w.two_j, theta);
        const CMatrix block = rot * diag.cast<cplx>().asDiagonal() * rot.adjoint();
        out.push_back({n, w.two_j, HermMatrix::hermitian_part(block), w.weight});
    }
    return out;
}

}  // namespace holevo
