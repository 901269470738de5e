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

#include "holevo/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <memory>
#include <string>

#include "holevo/error.hpp"

namespace holevo {

QuadratureRule gauss_legendre(int order, double a, double b) {
    if (order < 1) throw_validation("gauss_legendre", "order must be positive, got " + std::to_string(order));
    if (!(b > a)) throw_validation("gauss_legendre", "empty interval");
    std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
        gsl_integration_glfixed_table_alloc(static_cast<size_t>(order)), &gsl_integration_glfixed_table_free);
    if (!table) throw_precision("gauss_legendre", "could not build a rule of order " + std::to_string(order));
    QuadratureRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int k = 0; k < order; ++k) {
        double x = 0.0;
        double w = 0.0;
        gsl_integration_glfixed_point(a, b, static_cast<size_t>(k), &x, &w, table.get());
        rule.nodes(k) = x;
        rule.weights(k) = w;
    }
    return rule;
}

}  // namespace holevo
