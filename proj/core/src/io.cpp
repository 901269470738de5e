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

#include "holevo/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "holevo/error.hpp"

namespace holevo {

namespace {

using nlohmann::json;

json parse_json(const char* where, std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw_validation(where, std::string("malformed JSON: ") + e.what());
    }
}

void require_object(const char* where, const json& j, const std::set<std::string>& allowed) {
    if (!j.is_object()) throw_validation(where, "expected a JSON object");
    for (const auto& item : j.items()) {
        if (!allowed.count(item.key())) throw_validation(where, "unknown key '" + item.key() + "'");
    }
}

const json& field(const char* where, const json& j, const char* key) {
    if (!j.contains(key)) throw_validation(where, std::string("missing key '") + key + "'");
    return j.at(key);
}

double number(const char* where, const json& j) {
    if (!j.is_number()) throw_validation(where, "expected a number, got " + j.dump());
    return j.get<double>();
}

int integer(const char* where, const json& j) {
    if (!j.is_number_integer()) throw_validation(where, "expected an integer, got " + j.dump());
    return j.get<int>();
}

cplx entry(const char* where, const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw_validation(where, "matrix entry must be a number or a [re, im] pair, got " + j.dump());
}

CMatrix matrix_from(const char* where, const json& j) {
    if (!j.is_array() || j.empty()) throw_validation(where, "matrix must be a non-empty array of rows");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    Eigen::Index cols = -1;
    for (const json& row : j) {
        if (!row.is_array() || row.empty()) throw_validation(where, "each matrix row must be a non-empty array");
        if (cols < 0) cols = static_cast<Eigen::Index>(row.size());
        if (static_cast<Eigen::Index>(row.size()) != cols) throw_validation(where, "ragged matrix rows");
    }
    CMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = entry(where, j[r][c]);
    }
    return m;
}

RMatrix real_matrix_from(const char* where, const json& j) {
    const CMatrix m = matrix_from(where, j);
    if (m.imag().cwiseAbs().maxCoeff() != 0.0) throw_validation(where, "expected a real matrix");
    return m.real();
}

RVector vector_from(const char* where, const json& j) {
    if (!j.is_array()) throw_validation(where, "expected an array of numbers");
    RVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k) v(static_cast<Eigen::Index>(k)) = number(where, j[k]);
    return v;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string text_of(const Record::Value& v, bool csv) {
    return std::visit(
        [csv](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!csv) return format_number(x);
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.17g", x);
                return buf;
            } else if constexpr (std::is_same_v<T, long long>) {
                return std::to_string(x);
            } else if constexpr (std::is_same_v<T, bool>) {
                return x ? "true" : "false";
            } else {
                return x;
            }
        },
        v);
}

json json_of(const Record& r) {
    json obj = json::object();
    for (const auto& [key, value] : r.fields()) {
        std::visit([&](const auto& x) { obj[key] = x; }, value);
    }
    return obj;
}

}  // namespace

CMatrix parse_matrix_literal(std::string_view text) {
    return matrix_from("parse_matrix_literal", parse_json("parse_matrix_literal", text));
}

RMatrix parse_real_matrix_literal(std::string_view text) {
    return real_matrix_from("parse_real_matrix_literal", parse_json("parse_real_matrix_literal", text));
}

RVector parse_vector_literal(std::string_view text) {
    const std::string t = trim(text);
    if (!t.empty() && t.front() == '[')
        return vector_from("parse_vector_literal", parse_json("parse_vector_literal", t));
    return vector_from("parse_vector_literal", parse_json("parse_vector_literal", "[" + t + "]"));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_validation("read_text_file", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ModelSpec parse_model_spec(std::string_view json_text) {
    const char* where = "model file";
    const json j = parse_json(where, json_text);
    require_object(where, j, {"builtin", "rho", "grads", "theta", "name"});
    ModelSpec spec;
    if (j.contains("builtin")) {
        if (j.contains("rho") || j.contains("grads")) throw_validation(where, "give either 'builtin' or 'rho'/'grads'");
        if (!j["builtin"].is_string()) throw_validation(where, "'builtin' must be a string");
        spec.family = builtin_model(j["builtin"].get<std::string>());
        spec.name = spec.family->name();
        if (j.contains("theta")) spec.point = spec.family->evaluate(vector_from(where, j["theta"]));
        return spec;
    }
    const HermMatrix rho(matrix_from(where, field(where, j, "rho")), 1e-10);
    const json& g = field(where, j, "grads");
    if (!g.is_array() || g.empty()) throw_validation(where, "'grads' must be a non-empty array of matrices");
    std::vector<HermMatrix> grads;
    for (const json& m : g) grads.emplace_back(matrix_from(where, m), 1e-10);
    RVector theta = j.contains("theta") ? vector_from(where, j["theta"]) : RVector();
    spec.point = ModelPoint::make(rho, grads, theta);
    spec.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "explicit";
    return spec;
}

GaussianShiftModel parse_gaussian_model(std::string_view json_text) {
    const char* where = "gaussian model file";
    const json j = parse_json(where, json_text);
    require_object(where, j, {"q_modes", "c_vars", "A", "V"});
    return GaussianShiftModel(integer(where, field(where, j, "q_modes")), integer(where, field(where, j, "c_vars")),
                              real_matrix_from(where, field(where, j, "A")),
                              real_matrix_from(where, field(where, j, "V")));
}

Prior parse_prior(std::string_view json_text) {
    const char* where = "prior file";
    const json j = parse_json(where, json_text);
    if (!j.is_object()) throw_validation(where, "expected a JSON object");
    if (!j.contains("named")) {
        require_object(where, j, {"nodes", "weights", "density", "gradient", "boundary_vanishing"});
        Prior p;
        p.name = "grid";
        const json& nodes = field(where, j, "nodes");
        if (!nodes.is_array()) throw_validation(where, "'nodes' must be an array");
        for (const json& x : nodes) p.nodes.push_back(vector_from(where, x));
        p.weights = vector_from(where, field(where, j, "weights"));
        p.density = vector_from(where, field(where, j, "density"));
        if (j.contains("gradient")) {
            for (const json& x : j["gradient"]) p.gradient.push_back(vector_from(where, x));
        }
        p.boundary_vanishing = j.value("boundary_vanishing", false);
        p.validate();
        return p;
    }
    const std::string name = j["named"].is_string() ? j["named"].get<std::string>() : "";
    if (name == "gaussian") {
        require_object(where, j, {"named", "mean", "cov", "nodes", "width"});
        return gaussian_prior(vector_from(where, field(where, j, "mean")),
                              real_matrix_from(where, field(where, j, "cov")),
                              j.contains("nodes") ? integer(where, j["nodes"]) : 128,
                              j.contains("width") ? number(where, j["width"]) : 10.0);
    }
    if (name == "uniform") {
        require_object(where, j, {"named", "a", "b", "nodes"});
        return uniform_prior(number(where, field(where, j, "a")), number(where, field(where, j, "b")),
                             j.contains("nodes") ? integer(where, j["nodes"]) : 128);
    }
    if (name == "cosine-squared") {
        require_object(where, j, {"named", "center", "length", "nodes"});
        return cosine_squared_prior(number(where, field(where, j, "center")), number(where, field(where, j, "length")),
                                    j.contains("nodes") ? integer(where, j["nodes"]) : 128);
    }
    if (name == "uniform-sphere") {
        require_object(where, j, {"named", "nodes"});
        return uniform_sphere_prior(j.contains("nodes") ? integer(where, j["nodes"]) : 32);
    }
    if (name == "uniform-radial") {
        require_object(where, j, {"named", "r_nodes", "angle_nodes"});
        return radial_prior([](double) { return 1.0; }, j.contains("r_nodes") ? integer(where, j["r_nodes"]) : 64,
                            j.contains("angle_nodes") ? integer(where, j["angle_nodes"]) : 16);
    }
    throw_validation(where, "unknown named prior '" + name + "'");
}

CostMatrix bures_cost(std::string_view model_name, const RVector& theta) {
    const char* where = "bures_cost";
    if (model_name == "qubit_r_theta" || model_name == "qubit_bloch_spherical") {
        const double r = theta(0);
        if (!(r >= 0.0 && r < 1.0)) throw_validation(where, "Bures cost needs 0 <= r < 1");
        RVector d(theta.size());
        d(0) = 1.0 / (1.0 - r * r);
        d(1) = r * r;
        if (theta.size() == 3) d(2) = r * r * std::sin(theta(1)) * std::sin(theta(1));
        return CostMatrix::diagonal(d);
    }
    throw_validation(where, "Bures cost is defined for qubit_r_theta and qubit_bloch_spherical only, not '" +
                                std::string(model_name) + "'");
}

CostMatrix parse_cost(std::string_view spec, const ModelPoint& pt, std::string_view model_name) {
    const std::string s = trim(spec);
    const int p = pt.param_count();
    CostMatrix c;
    if (s.empty() || s == "identity") {
        c = CostMatrix::identity(p);
    } else if (s.rfind("diag:", 0) == 0) {
        c = CostMatrix::diagonal(parse_vector_literal(s.substr(5)));
    } else if (s == "bures") {
        c = bures_cost(model_name, pt.theta);
    } else {
        c = CostMatrix(parse_real_matrix_literal(s));
    }
    if (c.size() != p) {
        throw_validation("parse_cost", "cost is " + std::to_string(c.size()) + "x" + std::to_string(c.size()) +
                                           " but the model has " + std::to_string(p) + " parameters");
    }
    return c;
}

OutputFormat parse_format(std::string_view name) {
    if (name == "table") return OutputFormat::table;
    if (name == "structured" || name == "json") return OutputFormat::structured;
    if (name == "csv") return OutputFormat::csv;
    throw_validation("parse_format", "unknown format '" + std::string(name) + "' (table, structured, csv)");
}

Record& Record::add(std::string key, Value v) {
    fields_.emplace_back(std::move(key), std::move(v));
    return *this;
}

std::string format_records(const std::vector<Record>& records, OutputFormat format) {
    std::ostringstream out;
    if (format == OutputFormat::structured) {
        if (records.size() == 1) {
            out << json_of(records.front()).dump(2) << '\n';
        } else {
            json arr = json::array();
            for (const Record& r : records) arr.push_back(json_of(r));
            out << arr.dump(2) << '\n';
        }
        return out.str();
    }
    if (records.empty()) return {};
    std::vector<std::string> keys;
    for (const Record& r : records) {
        for (const auto& kv : r.fields()) {
            if (std::find(keys.begin(), keys.end(), kv.first) == keys.end()) keys.push_back(kv.first);
        }
    }
    auto cell = [&](const Record& r, const std::string& key, bool csv) {
        for (const auto& kv : r.fields()) {
            if (kv.first == key) return text_of(kv.second, csv);
        }
        return std::string();
    };
    if (format == OutputFormat::csv) {
        for (std::size_t k = 0; k < keys.size(); ++k) out << (k ? "," : "") << keys[k];
        out << '\n';
        for (const Record& r : records) {
            for (std::size_t k = 0; k < keys.size(); ++k) out << (k ? "," : "") << cell(r, keys[k], true);
            out << '\n';
        }
        return out.str();
    }
    if (records.size() == 1) {
        std::size_t width = 0;
        for (const std::string& k : keys) width = std::max(width, k.size());
        for (const auto& kv : records.front().fields()) {
            out << kv.first << std::string(width - kv.first.size() + 2, ' ') << text_of(kv.second, false) << '\n';
        }
        return out.str();
    }
    std::vector<std::size_t> widths;
    for (const std::string& k : keys) {
        std::size_t w = k.size();
        for (const Record& r : records) w = std::max(w, cell(r, k, false).size());
        widths.push_back(w);
    }
    for (std::size_t k = 0; k < keys.size(); ++k) {
        out << keys[k];
        if (k + 1 < keys.size()) out << std::string(widths[k] - keys[k].size() + 2, ' ');
    }
    out << '\n';
    for (const Record& r : records) {
        for (std::size_t k = 0; k < keys.size(); ++k) {
            const std::string c = cell(r, keys[k], false);
            out << c;
            if (k + 1 < keys.size()) out << std::string(widths[k] - c.size() + 2, ' ');
        }
        out << '\n';
    }
    return out.str();
}

Record bound_report_record(const BoundReport& r) {
    Record rec;
    if (r.sld) rec.add("sld", *r.sld);
    if (r.rld) rec.add("rld", *r.rld);
    if (r.hgm) rec.add("hgm", *r.hgm);
    if (r.hcr) rec.add("hcr", *r.hcr);
    for (const auto& [k, v] : r.diagnostics) rec.add(k, v);
    for (const auto& [k, v] : r.notes) rec.add("note." + k, v);
    return rec;
}

}  // namespace holevo
