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

#ifndef HOLEVO_QUADRATURE_HPP
#define HOLEVO_QUADRATURE_HPP

#include "holevo/matrix.hpp"

namespace holevo {

/// Fixed-order Gauss-Legendre rule on [a, b].
struct QuadratureRule {
    RVector nodes;
    RVector weights;

    Eigen::Index size() const { return nodes.size(); }
};

QuadratureRule gauss_legendre(int order, double a, double b);

}  // namespace holevo

#endif  // HOLEVO_QUADRATURE_HPP
