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

#include "holevo/qlan.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "holevo/error.hpp"

namespace holevo {

namespace {
constexpr double kDegeneracyTol = 1e-10;
constexpr double kNormTol = 1e-10;
}  // namespace

RVector checked_spectrum(const RVector& mu, std::vector<std::string>* warnings) {
    const char* where = "limit_model";
    if (mu.size() < 2) throw_validation(where, "spectrum needs at least two entries");
    if (!mu.allFinite()) throw_validation(where, "spectrum has non-finite entries");
    if (mu.minCoeff() <= 0.0) throw_validation(where, "spectrum must be strictly positive (full-rank state)");
    if (std::abs(mu.sum() - 1.0) > kNormTol) {
        throw_validation(where, "spectrum sums to " + std::to_string(mu.sum()) + ", not 1");
    }
    RVector out = mu;
    if (!std::is_sorted(out.begin(), out.end(), std::greater<>())) {
        std::sort(out.begin(), out.end(), std::greater<>());
        if (warnings) warnings->push_back("spectrum was not descending and has been sorted");
    }
    for (Eigen::Index k = 0; k + 1 < out.size(); ++k) {
        if (out(k) - out(k + 1) <= kDegeneracyTol) {
            throw_validation(where, "degenerate spectrum: entries " + std::to_string(k + 1) + " and " +
                                        std::to_string(k + 2) + " coincide, the limit model is undefined");
        }
    }
    return out;
}

QuditLimitModel limit_model(const RVector& mu) {
    QuditLimitModel m;
    m.mu = checked_spectrum(mu, &m.warnings);
    const Eigen::Index d = m.mu.size();
    const RVector head = m.mu.head(d - 1);
    m.classical_cov = RMatrix(head.asDiagonal()) - head * head.transpose();
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = i + 1; j < d; ++j) {
            const double gap = m.mu(i) - m.mu(j);
            m.modes.push_back(
                {static_cast<int>(i), static_cast<int>(j), std::sqrt(2.0 / gap), (m.mu(i) + m.mu(j)) / (2.0 * gap)});
        }
    }
    return m;
}

double lam_frobenius(const RVector& mu) {
    const RVector s = checked_spectrum(mu);
    const Eigen::Index d = s.size();
    double total = 0.0;
    for (Eigen::Index k = 0; k < d; ++k) {
        const double i = static_cast<double>(k + 1);
        total += s(k) * (1.0 - s(k)) + 2.0 * (static_cast<double>(d) - i) * s(k);
    }
    return total;
}

double lam_bures(const RVector& mu) {
    const RVector s = checked_spectrum(mu);
    const Eigen::Index d = s.size();
    double total = static_cast<double>(d - 1);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = i + 1; j < d; ++j) total += 4.0 * s(i) / (s(i) + s(j));
    }
    return total;
}

}  // namespace holevo
