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

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "holevo/bayes.hpp"
#include "holevo/error.hpp"
#include "holevo/gaussian.hpp"
#include "holevo/hcr.hpp"
#include "holevo/io.hpp"
#include "holevo/qlan.hpp"
#include "holevo/sim.hpp"

namespace {

using namespace holevo;

constexpr const char* kConventions = R"(Conventions:
  hbar = 1 and [Q, P] = i, so the vacuum covariance is I/2.
  Qubit states are (I + r.sigma)/2 with Bloch vector r, |r| <= 1.
  qubit_r_theta has Bloch vector r (sin theta, 0, cos theta).
  Costs are tr(C Sigma) for estimator covariance Sigma; the Holevo bound is
  min over locally unbiased X of tr(C Re Z) + ||sqrt(C) Im Z sqrt(C)||_1.
  The D superoperator satisfies {D(X), rho} = i [X, rho].
Exit codes: 0 ok, 1 table mismatch, 2 invalid input, 3 solver did not converge,
  4 loss of precision.)";

struct Common {
    std::string format = "table";
    std::string out;
    double tol_gap = 1e-8;

    SdpOptions sdp() const {
        SdpOptions o;
        o.gap_tol = tol_gap;
        return o;
    }
};

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw_validation("output", "cannot write '" + c.out + "'");
    f << text;
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format: table, structured or csv")
        ->check(CLI::IsMember({"table", "structured", "json", "csv"}));
    sub->add_option("--out", c.out, "Write output to this file instead of stdout");
    sub->add_option("--tol-gap", c.tol_gap, "Relative duality-gap tolerance for SDP solves")
        ->check(CLI::PositiveNumber);
}

bool is_builtin(const std::string& name) {
    if (name == "qubit_phase") return true;
    for (const std::string& n : builtin_model_names()) {
        if (n == name) return true;
    }
    return false;
}

ParametricModel resolve_family(const std::string& name, double r) {
    if (name == "qubit_phase") return qubit_phase(r);
    return builtin_model(name);
}

struct BoundsArgs {
    Common common;
    std::string model;
    std::string point;
    std::string cost = "identity";
};

int run_bounds(const BoundsArgs& a) {
    ModelSpec spec;
    if (is_builtin(a.model)) {
        spec.family = resolve_family(a.model, 1.0);
        spec.name = a.model;
    } else {
        spec = parse_model_spec(read_text_file(a.model));
    }
    if (!a.point.empty()) {
        if (!spec.family) throw_validation("bounds", "--point applies to parametric models only");
        spec.point = spec.family->evaluate(parse_vector_literal(a.point));
    }
    if (!spec.point) throw_validation("bounds", "a point is required: pass --point or give 'theta' in the model file");
    const CostMatrix c = parse_cost(a.cost, *spec.point, spec.name);
    HcrOptions opts;
    opts.sdp = a.common.sdp();
    Record rec;
    rec.add("model", spec.name);
    const Record report = bound_report_record(bound_report(*spec.point, c, opts));
    for (const auto& kv : report.fields()) rec.add(kv.first, kv.second);
    emit(a.common, format_records({rec}, parse_format(a.common.format)));
    return 0;
}

struct GaussianArgs {
    Common common;
    std::string model;
    std::string cost = "identity";
    bool force_sdp = false;
};

int run_gaussian(const GaussianArgs& a) {
    const GaussianShiftModel g = parse_gaussian_model(read_text_file(a.model));
    const int p = g.param_count();
    CostMatrix c = CostMatrix::identity(p);
    if (a.cost != "identity") {
        c = a.cost.rfind("diag:", 0) == 0 ? CostMatrix::diagonal(parse_vector_literal(a.cost.substr(5)))
                                          : CostMatrix(parse_real_matrix_literal(a.cost));
    }
    if (c.size() != p) throw_validation("gaussian", "cost size does not match the parameter count");
    Record rec;
    rec.add("q_modes", static_cast<long long>(g.q_modes()))
        .add("c_vars", static_cast<long long>(g.c_vars()))
        .add("params", static_cast<long long>(p));
    rec.add("sld", (c.matrix() * gaussian_qfi(g).qfi.inverse()).trace());
    const GaussianHcr h = gaussian_hcr(g, c, a.force_sdp, a.common.sdp());
    rec.add("hcr", h.value).add("closed_form", h.closed_form);
    try {
        rec.add("rld", gaussian_rld_bound(g, c));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::validation) throw;
        rec.add("note.rld", std::string(e.what()));
    }
    const LinearMeasurement lm = optimal_linear_measurement(g, c, a.common.sdp());
    rec.add("measured_cost", lm.measured_cost).add("regularized", lm.regularized);
    emit(a.common, format_records({rec}, parse_format(a.common.format)));
    return 0;
}

struct QlanArgs {
    Common common;
    std::optional<double> r;
    std::string spectrum;
};

int run_qlan(const QlanArgs& a) {
    RVector mu;
    if (!a.spectrum.empty()) {
        mu = parse_vector_literal(a.spectrum);
    } else if (a.r) {
        mu.resize(2);
        mu << 0.5 * (1.0 + *a.r), 0.5 * (1.0 - *a.r);
    } else {
        throw_validation("qlan", "pass --spectrum or --r");
    }
    const QuditLimitModel m = limit_model(mu);
    for (const std::string& w : m.warnings) std::cerr << "warning: " << w << '\n';
    Record rec;
    rec.add("d", static_cast<long long>(m.dim()))
        .add("lam_bures", lam_bures(m.mu))
        .add("lam_frobenius", lam_frobenius(m.mu));
    for (const LimitMode& mode : m.modes) {
        const std::string key = "mode_" + std::to_string(mode.i + 1) + "_" + std::to_string(mode.j + 1);
        rec.add(key + ".thermal_cov", mode.thermal_cov).add(key + ".shift_scale", mode.shift_scale);
    }
    emit(a.common, format_records({rec}, parse_format(a.common.format)));
    return 0;
}

struct BayesArgs {
    Common common;
    std::string kind = "covariant-pure";
    int n = 1;
    double r = 0.8;
    int w_power = 0;
    int nodes = 128;
    std::string model = "qubit_phase";
    std::string prior;
    std::string cost = "identity";
};

int run_bayes(const BayesArgs& a) {
    Record rec;
    rec.add("kind", a.kind);
    if (a.kind == "covariant-pure") {
        rec.add("n", static_cast<long long>(a.n)).add("cost", covariant_pure_qubit_cost(a.n));
    } else if (a.kind == "covariant-mixed") {
        const int k = a.w_power;
        CovariantQubitSpec spec{a.n, [k](double x) { return (k + 1.0) * std::pow(x, k); }, a.nodes};
        const CovariantQubitCost c = covariant_mixed_qubit_cost(spec);
        rec.add("n", static_cast<long long>(a.n))
            .add("exact", c.exact)
            .add("asymptotic", c.asymptotic)
            .add("n_exact", a.n * c.exact)
            .add("n_asymptotic", a.n * c.asymptotic);
    } else {
        if (a.prior.empty()) throw_validation("bayes", "--prior is required for kind '" + a.kind + "'");
        const ParametricModel m = resolve_family(a.model, a.r);
        const Prior prior = parse_prior(read_text_file(a.prior));
        rec.add("model", m.name());
        if (a.kind == "single") {
            const BayesSingleResult b = bayes_optimal_single(m, prior);
            rec.add("cost", b.cost).add("prior_mean", b.prior_mean).add("prior_variance", b.prior_variance);
        } else if (a.kind == "multi" || a.kind == "van-trees") {
            CostMatrix c = CostMatrix::identity(m.param_count());
            if (a.cost != "identity") c = parse_cost(a.cost, m.evaluate(prior.mean()), m.name());
            rec.add(a.kind == "multi" ? "lower_bound" : "van_trees",
                    a.kind == "multi" ? bayes_lower_multi(m, prior, c) : van_trees_bound(m, prior, c, a.n));
        } else if (a.kind == "holevo-asymptotic") {
            HcrOptions opts;
            opts.sdp = a.common.sdp();
            const std::string name = m.name();
            const std::string spec = a.cost;
            CostField field = [&, name, spec](const RVector& th) { return parse_cost(spec, m.evaluate(th), name); };
            rec.add("asymptotic_cost", bayes_holevo_asymptotic(m, prior, field, opts));
        } else {
            throw_validation("bayes", "unknown kind '" + a.kind + "'");
        }
    }
    emit(a.common, format_records({rec}, parse_format(a.common.format)));
    return 0;
}

struct SimulateArgs {
    Common common;
    int n = 2;
    double r = 0.5;
    double theta = 0.0;
    double c_r = 1.0;
    long long trials = 100000;
    std::uint64_t seed = 1;
    std::string estimator = "unbiased";
};

int run_simulate(const SimulateArgs& a) {
    CollectiveRunConfig cfg;
    cfg.n = a.n;
    cfg.r = a.r;
    cfg.theta = a.theta;
    cfg.c_r = a.c_r;
    cfg.trials = a.trials;
    cfg.seed = a.seed;
    cfg.estimator = a.estimator == "spin-length" ? RadiusEstimator::spin_length : RadiusEstimator::locally_unbiased;
    const CollectiveRunResult res = collective_estimation_run(cfg);

    RVector th(2);
    th << a.r, a.theta;
    RVector d(2);
    d << a.c_r, a.r * a.r;
    const ModelPoint pt = qubit_r_theta().evaluate(th);
    const CostMatrix c = CostMatrix::diagonal(d);
    const double hcr = hcr_bound(pt, c).value;
    const double hgm = hgm_bound(sld_set(pt), c);

    const OutputFormat fmt = parse_format(a.common.format);
    if (fmt == OutputFormat::csv) {
        std::ostringstream os;
        write_curve_csv(
            os,
            {{a.n, a.r, "collective", res.n_cost, res.n_stderr}, {1, a.r, "HCR", hcr, 0.0}, {1, a.r, "HGM", hgm, 0.0}});
        emit(a.common, os.str());
        return 0;
    }
    Record rec;
    rec.add("n", static_cast<long long>(a.n))
        .add("r", a.r)
        .add("theta", a.theta)
        .add("trials", a.trials)
        .add("seed", static_cast<long long>(a.seed))
        .add("estimator", a.estimator)
        .add("n_cost", res.n_cost)
        .add("stderr", res.n_stderr)
        .add("expected", res.expected)
        .add("hcr", hcr)
        .add("hgm", hgm);
    emit(a.common, format_records({rec}, fmt));
    return 0;
}

struct Table1Args {
    Common common;
    double r = 0.5;
    double tol = 1e-6;
};

int run_table1(const Table1Args& a) {
    const cli::Table1 t = cli::compute_table1(a.r, a.tol);
    const OutputFormat fmt = parse_format(a.common.format);
    if (fmt == OutputFormat::table) {
        emit(a.common, cli::render_table1(t));
    } else {
        std::vector<Record> recs;
        for (const cli::Table1Column& c : t.columns) {
            Record rec;
            rec.add("family", c.family)
                .add("model", c.name)
                .add("sld", c.sld)
                .add("hcr_minus_sld", c.hcr - c.sld)
                .add("incompatible", c.incompatible)
                .add("collective_advantage", c.collective_advantage);
            recs.push_back(rec);
        }
        emit(a.common, format_records(recs, fmt));
    }
    if (!t.ok()) {
        for (const std::string& m : t.mismatches) std::cerr << "mismatch: " << m << '\n';
        return 1;
    }
    return 0;
}

struct FiguresArgs {
    std::string out = ".";
    long long trials = 20000;
    std::uint64_t seed = 1;
};

int run_figures(const FiguresArgs& a) {
    std::filesystem::create_directories(a.out);
    std::vector<double> grid2;
    for (int k = 0; k < 20; ++k) grid2.push_back(0.05 * k);
    grid2.push_back(0.99);
    std::vector<double> grid1;
    for (int k = 1; k < 10; ++k) grid1.push_back(0.1 * k);
    grid1.push_back(0.99);
    const auto write = [&](const std::string& name, const std::vector<CurveRow>& rows) {
        const std::string path = (std::filesystem::path(a.out) / name).string();
        std::ofstream f(path, std::ios::binary);
        if (!f) throw_validation("figures", "cannot write '" + path + "'");
        write_curve_csv(f, rows);
        std::cout << "wrote " << path << '\n';
    };
    write("fig2.csv", cli::figure2_rows(grid2));
    write("fig1.csv", cli::figure1_rows(grid1, a.trials, a.seed));
    return 0;
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::validation:
            return 2;
        case ErrorKind::convergence:
            return 3;
        case ErrorKind::precision:
            return 4;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Holevo Cramer-Rao bounds, Gaussian limit models and Bayesian costs for small quantum models"};
    app.footer(kConventions);
    app.set_config("--config", "", "Read options from a TOML or INI file; unknown keys are rejected");
    app.require_subcommand(1);

    BoundsArgs bounds;
    auto* sb = app.add_subcommand("bounds", "SLD, RLD, HGM and Holevo bounds at one point");
    add_common(sb, bounds.common);
    sb->add_option("--model", bounds.model, "Builtin model name or model file")->required();
    sb->add_option("--point", bounds.point, "Parameter values, e.g. 0.5,1.2");
    sb->add_option("--cost", bounds.cost, "identity, diag:a,b,..., bures, or a matrix literal");

    GaussianArgs gauss;
    auto* sg = app.add_subcommand("gaussian", "Bounds and optimal linear measurement for a Gaussian shift model");
    add_common(sg, gauss.common);
    sg->add_option("--model", gauss.model, "Gaussian model file")->required();
    sg->add_option("--cost", gauss.cost, "identity, diag:a,b,..., or a matrix literal");
    sg->add_flag("--force-sdp", gauss.force_sdp, "Use the SDP even when a closed form exists");

    QlanArgs qlan;
    auto* sq = app.add_subcommand("qlan", "Gaussian limit model and LAM costs of a full-rank qudit");
    add_common(sq, qlan.common);
    sq->add_option("--spectrum", qlan.spectrum, "Eigenvalues of the qudit state, e.g. 0.5,0.3,0.2");
    sq->add_option("--r", qlan.r, "Qubit Bloch length, shorthand for the spectrum ((1+r)/2, (1-r)/2)");

    BayesArgs bayes;
    auto* sba = app.add_subcommand("bayes", "Bayesian costs and bounds");
    add_common(sba, bayes.common);
    sba->add_option("--kind", bayes.kind,
                    "covariant-pure, covariant-mixed, single, multi, van-trees, holevo-asymptotic")
        ->check(
            CLI::IsMember({"covariant-pure", "covariant-mixed", "single", "multi", "van-trees", "holevo-asymptotic"}));
    sba->add_option("--n", bayes.n, "Number of copies");
    sba->add_option("--r", bayes.r, "Bloch length of the qubit_phase family");
    sba->add_option("--w-power", bayes.w_power, "Radial prior w(r) = (k+1) r^k for covariant-mixed");
    sba->add_option("--nodes", bayes.nodes, "Gauss-Legendre nodes for covariant-mixed");
    sba->add_option("--model", bayes.model, "Builtin model name");
    sba->add_option("--prior", bayes.prior, "Prior file");
    sba->add_option("--cost", bayes.cost, "identity, diag:a,b,..., bures, or a matrix literal");

    SimulateArgs sim;
    auto* ss = app.add_subcommand("simulate", "Monte-Carlo run of the collective (r, theta) strategy");
    add_common(ss, sim.common);
    ss->add_option("--n", sim.n, "Number of copies");
    ss->add_option("--r", sim.r, "Bloch length");
    ss->add_option("--theta", sim.theta, "Polar angle");
    ss->add_option("--c-r", sim.c_r, "Weight of the radial error");
    ss->add_option("--trials", sim.trials, "Number of trials (at least 1000)");
    ss->add_option("--seed", sim.seed, "64-bit seed");
    ss->add_option("--estimator", sim.estimator, "unbiased or spin-length")
        ->check(CLI::IsMember({"unbiased", "spin-length"}));

    Table1Args t1;
    auto* st = app.add_subcommand("table1", "SLD and Holevo values of the qubit and Gaussian example models");
    add_common(st, t1.common);
    st->add_option("--r", t1.r, "Bloch length")->check(CLI::Range(1e-6, 1.0 - 1e-6));
    st->add_option("--tol", t1.tol, "Agreement tolerance");

    FiguresArgs figs;
    auto* sf = app.add_subcommand("figures", "Curve data for the bound comparison plots");
    sf->add_option("--out", figs.out, "Output directory");
    sf->add_option("--trials", figs.trials, "Monte-Carlo trials per point");
    sf->add_option("--seed", figs.seed, "64-bit seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sb) return run_bounds(bounds);
        if (*sg) return run_gaussian(gauss);
        if (*sq) return run_qlan(qlan);
        if (*sba) return run_bayes(bayes);
        if (*ss) return run_simulate(sim);
        if (*st) return run_table1(t1);
        if (*sf) return run_figures(figs);
    } catch (const Error& e) {
        std::cerr << "error (" << kind_name(e.kind()) << "): " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
