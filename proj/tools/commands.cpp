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

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "holevo/bounds.hpp"
#include "holevo/gaussian.hpp"
#include "holevo/hcr.hpp"
#include "holevo/model.hpp"

namespace holevo::cli {

namespace {

Table1Column qubit_column(const std::string& name, const ModelPoint& pt, const CostMatrix& c, double esld, double ehcr,
                          double tol) {
    const SldSet s = sld_set(pt);
    Table1Column col{"qubit", name};
    col.sld = sld_cr_bound(s, c);
    col.hcr = hcr_bound(pt, c).value;
    col.expected_sld = esld;
    col.expected_hcr = ehcr;
    col.incompatible = col.hcr - col.sld > tol;
    col.collective_advantage = hgm_bound(s, c) - col.hcr > tol;
    return col;
}

Table1Column gaussian_column(const std::string& name, const GaussianShiftModel& g, double esld, double ehcr,
                             double tol) {
    const CostMatrix c = CostMatrix::identity(g.param_count());
    Table1Column col{"Gaussian", name};
    col.sld = (c.matrix() * gaussian_qfi(g).qfi.inverse()).trace();
    col.hcr = gaussian_hcr(g, c).value;
    col.expected_sld = esld;
    col.expected_hcr = ehcr;
    col.incompatible = col.hcr - col.sld > tol;
    // A Gaussian shift model is a single copy; collective measurements have nothing to act on.
    col.collective_advantage = false;
    return col;
}

void compare(Table1& t, const std::string& what, double got, double want, double tol) {
    if (std::abs(got - want) > tol) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s: got %.12g, expected %.12g (diff %.3g)", what.c_str(), got, want,
                      got - want);
        t.mismatches.emplace_back(buf);
    }
}

}  // namespace

Table1 compute_table1(double r, double tol) {
    Table1 t;
    t.r = r;
    const double half_pi = 0.5 * std::numbers::pi;
    const double mixed = 1.0 - r * r;

    // Qubit columns with cost diag(c(r), r^2, r^2 sin^2 theta), c = 1, at theta = pi/2.
    {
        RVector th(2);
        th << half_pi, 0.0;
        t.columns.push_back(
            qubit_column("(theta,phi)", pure_qubit().evaluate(th), CostMatrix::identity(2), 2.0, 4.0, tol));
    }
    {
        RVector th(2);
        th << r, half_pi;
        RVector d(2);
        d << 1.0, r * r;
        t.columns.push_back(qubit_column("(r,theta)", qubit_r_theta().evaluate(th), CostMatrix::diagonal(d),
                                         1.0 + mixed, 1.0 + mixed, tol));
    }
    {
        RVector th(3);
        th << r, half_pi, 0.0;
        RVector d(3);
        d << 1.0, r * r, r * r;
        t.columns.push_back(qubit_column("(r,theta,phi)", qubit_bloch_spherical().evaluate(th), CostMatrix::diagonal(d),
                                         2.0 + mixed, 2.0 + mixed + 2.0 * r, tol));
    }

    // Gaussian columns: sigma_q^2 = sigma_p^2 = 1/(2r), sigma_z^2 = 1 - r^2, and
    // q, p scaled by 1/sqrt(2r). The pure-state partner uses r = 1.
    {
        const RMatrix a = RMatrix::Identity(2, 2) / std::sqrt(2.0);
        t.columns.push_back(
            gaussian_column("(q,p)", GaussianShiftModel(1, 0, a, 0.5 * RMatrix::Identity(2, 2)), 2.0, 4.0, tol));
    }
    const double sq = 1.0 / (2.0 * r);
    const double scale = 1.0 / std::sqrt(2.0 * r);
    RMatrix v = RMatrix::Zero(3, 3);
    v.diagonal() << sq, sq, mixed;
    {
        RMatrix a = RMatrix::Zero(3, 2);
        a(0, 0) = scale;
        a(2, 1) = 1.0;
        t.columns.push_back(gaussian_column("(q,z)", GaussianShiftModel(1, 1, a, v), 1.0 + mixed, 1.0 + mixed, tol));
    }
    {
        RMatrix a = RMatrix::Identity(3, 3);
        a(0, 0) = scale;
        a(1, 1) = scale;
        t.columns.push_back(
            gaussian_column("(q,p,z)", GaussianShiftModel(1, 1, a, v), 2.0 + mixed, 2.0 + mixed + 2.0 * r, tol));
    }

    for (const Table1Column& c : t.columns) {
        compare(t, c.family + " " + c.name + " SLD", c.sld, c.expected_sld, tol);
        compare(t, c.family + " " + c.name + " HCR", c.hcr, c.expected_hcr, tol);
    }
    for (std::size_t k = 0; k < 3; ++k) {
        const Table1Column& q = t.columns[k];
        const Table1Column& g = t.columns[k + 3];
        compare(t, "qubit " + q.name + " vs Gaussian " + g.name + " SLD", q.sld, g.sld, tol);
        compare(t, "qubit " + q.name + " vs Gaussian " + g.name + " HCR", q.hcr, g.hcr, tol);
    }
    return t;
}

std::string render_table1(const Table1& t) {
    std::ostringstream out;
    char buf[128];
    std::snprintf(buf, sizeof buf, "r = %g, c(r) = 1\n", t.r);
    out << buf;
    std::snprintf(buf, sizeof buf, "%-26s", "");
    out << buf;
    for (const Table1Column& c : t.columns) {
        std::snprintf(buf, sizeof buf, "%16s", (c.family.substr(0, 1) + " " + c.name).c_str());
        out << buf;
    }
    out << '\n';
    auto row = [&](const char* label, auto value) {
        std::snprintf(buf, sizeof buf, "%-26s", label);
        out << buf;
        for (const Table1Column& c : t.columns) out << value(c);
        out << '\n';
    };
    auto num = [&](double x) {
        std::snprintf(buf, sizeof buf, "%16.10f", x);
        return std::string(buf);
    };
    auto flag = [&](bool b) {
        std::snprintf(buf, sizeof buf, "%16s", b ? "+" : "-");
        return std::string(buf);
    };
    row("SLD", [&](const Table1Column& c) { return num(c.sld); });
    row("HCR - SLD", [&](const Table1Column& c) { return num(c.hcr - c.sld); });
    row("measurement incompat.", [&](const Table1Column& c) { return flag(c.incompatible); });
    row("collective advantage", [&](const Table1Column& c) { return flag(c.collective_advantage); });
    if (t.ok()) {
        out << "all columns match their closed forms and partners\n";
    } else {
        out << "MISMATCH\n";
        for (const std::string& m : t.mismatches) out << "  " << m << '\n';
    }
    return out.str();
}

std::vector<CurveRow> figure2_rows(const std::vector<double>& r_grid) {
    std::vector<CurveRow> rows;
    const ParametricModel m = qubit_bloch_cartesian();
    const CostMatrix c = CostMatrix::identity(3);
    for (double r : r_grid) {
        RVector th(3);
        th << 0.0, 0.0, r;
        const ModelPoint pt = m.evaluate(th);
        const SldSet s = sld_set(pt);
        rows.push_back({1, r, "HGM", hgm_bound(s, c), 0.0});
        rows.push_back({1, r, "HCR", hcr_bound(pt, c).value, 0.0});
        rows.push_back({1, r, "SLD", sld_cr_bound(s, c), 0.0});
    }
    return rows;
}

std::vector<CurveRow> figure1_rows(const std::vector<double>& r_grid, long long trials, std::uint64_t seed) {
    std::vector<CurveRow> rows;
    const ParametricModel m = qubit_r_theta();
    for (double r : r_grid) {
        RVector th(2);
        th << r, 0.0;
        RVector d(2);
        d << 1.0, r * r;
        const CostMatrix c = CostMatrix::diagonal(d);
        const ModelPoint pt = m.evaluate(th);
        rows.push_back({1, r, "HCR", hcr_bound(pt, c).value, 0.0});
        rows.push_back({1, r, "HGM", hgm_bound(sld_set(pt), c), 0.0});
        if (r <= 0.0 || r >= 1.0) continue;
        for (int n : {2, 4, 8}) {
            CollectiveRunConfig cfg;
            cfg.n = n;
            cfg.r = r;
            cfg.trials = trials;
            cfg.seed = seed;
            const CollectiveRunResult res = collective_estimation_run(cfg);
            rows.push_back({n, r, "collective", res.n_cost, res.n_stderr});
        }
    }
    return rows;
}

}  // namespace holevo::cli
