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

#ifndef HOLEVO_IO_HPP
#define HOLEVO_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "holevo/bayes.hpp"
#include "holevo/bounds.hpp"
#include "holevo/gaussian.hpp"
#include "holevo/matrix.hpp"
#include "holevo/model.hpp"

namespace holevo {

// Input files are JSON objects. Unknown keys are rejected. Matrices are
// arrays of rows; an entry is either a number or a [re, im] pair.

CMatrix parse_matrix_literal(std::string_view text);
RMatrix parse_real_matrix_literal(std::string_view text);

/// "0.5,1.2" or "[0.5, 1.2]".
RVector parse_vector_literal(std::string_view text);

std::string read_text_file(const std::string& path);

/// Either {"builtin": name} or {"rho": M, "grads": [M, ...], "theta": [...]}.
/// A builtin needs a point to become a ModelPoint; explicit data carries its own.
struct ModelSpec {
    std::string name;
    std::optional<ParametricModel> family;
    std::optional<ModelPoint> point;
};

ModelSpec parse_model_spec(std::string_view json_text);

/// {"q_modes": q, "c_vars": c, "A": M, "V": M}
GaussianShiftModel parse_gaussian_model(std::string_view json_text);

/// Either {"named": "gaussian" | "uniform" | "cosine-squared" | "uniform-sphere" |
/// "uniform-radial", ...parameters} or an explicit grid
/// {"nodes": [[...], ...], "weights": [...], "density": [...], "boundary_vanishing": bool}.
Prior parse_prior(std::string_view json_text);

/// "identity", "diag:a,b,...", "bures" (qubit families only, evaluated at the
/// point), or a matrix literal.
CostMatrix parse_cost(std::string_view spec, const ModelPoint& pt, std::string_view model_name);

/// Bures cost of the Bloch-ball families at a point: diag(1/(1-r^2), r^2, r^2 sin^2 theta)
/// for qubit_bloch_spherical and diag(1/(1-r^2), r^2) for qubit_r_theta.
CostMatrix bures_cost(std::string_view model_name, const RVector& theta);

enum class OutputFormat { table, structured, csv };

OutputFormat parse_format(std::string_view name);

/// An ordered list of named scalar or text fields.
class Record {
   public:
    using Value = std::variant<double, long long, bool, std::string>;

    Record& add(std::string key, Value v);
    const std::vector<std::pair<std::string, Value>>& fields() const { return fields_; }

   private:
    std::vector<std::pair<std::string, Value>> fields_;
};

/// One record renders as aligned "key value" lines, several as a table.
/// Structured output is a JSON document (an object, or an array of objects).
std::string format_records(const std::vector<Record>& records, OutputFormat format);

Record bound_report_record(const BoundReport& r);

}  // namespace holevo

#endif  // HOLEVO_IO_HPP
