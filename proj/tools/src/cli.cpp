// SPDX-License-Identifier: Apache-2.0
//
// fdrlos: fluctuating double-Rayleigh line-of-sight fading library
// Copyright (C) 2026 The fdrlos contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include "fdrlos_cli/cli.hpp"

#include "commands.hpp"

#include "fdrlos/analytic.hpp"
#include "fdrlos/empirics.hpp"
#include "fdrlos/errors.hpp"
#include "fdrlos/models.hpp"
#include "fdrlos_cli/csv.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace fdrlos::cli {

namespace {

using analytic::EvalPath;

struct RunConfig {
    std::string model = "fdrlos";
    double k = 1.0;
    double m = 1.0;
    std::optional<double> gamma_bar;
    std::optional<double> gamma_bar_db;
    std::optional<double> gamma_th;
    std::optional<double> gamma_th_db;
    std::string grid;
    std::string grid_db;
    bool oracle = false;
    bool asymptotic = false;
    std::size_t samples = 100'000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::string output;
    std::string samples_output;
    std::string figure;
    std::string output_dir;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_number(std::string_view s, const std::string& what) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw UsageError("bad " + what + " value '" + std::string(s) + "'");
    }
    return v;
}

ModelKind model_of(const RunConfig& c) {
    const auto kind = parse_model_kind(c.model);
    if (!kind) throw UsageError("unknown model '" + c.model + "'");
    return *kind;
}

double either(const std::optional<double>& linear, const std::optional<double>& db,
              const char* name) {
    if (linear && db) throw UsageError(std::string("give --") + name + " or --" + name + "-db, not both");
    if (linear) return *linear;
    if (db) return db_to_linear(*db);
    throw UsageError(std::string("--") + name + " or --" + name + "-db is required");
}

// Closed forms for FdRLoS unless --oracle; the other models pick their own route.
EvalPath path_of(const RunConfig& c, ModelKind model) {
    if (c.oracle) return EvalPath::Oracle;
    return model == ModelKind::FdRLoS ? EvalPath::ClosedForm : EvalPath::Auto;
}

class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw IoError("cannot open " + path + " for writing");
            os_ = &file_;
        }
    }
    std::ostream& stream() { return *os_; }
    void finish() {
        os_->flush();
        if (!*os_) throw IoError("write failed");
    }

private:
    std::ofstream file_;
    std::ostream* os_;
};

void emit(const RunConfig& c, std::ostream& out, const Curve& curve) {
    curve.validate();
    Sink sink(c.output, out);
    write_curve_csv(sink.stream(), curve);
    sink.finish();
}

void cmd_density_or_cdf(const RunConfig& c, std::ostream& out, bool cdf) {
    const ModelKind model = model_of(c);
    const FadingParams params(c.k, c.m, either(c.gamma_bar, c.gamma_bar_db, "gamma-bar"));
    if (c.grid.empty()) throw UsageError("--grid is required");
    const EvalPath path = path_of(c, model);
    Curve curve;
    curve.meta.model = model;
    curve.meta.params = params;
    curve.meta.quantity = cdf ? Quantity::Probability : Quantity::Density;
    curve.meta.abscissa_unit = "gamma";
    curve.abscissa = parse_grid(c.grid).values();
    for (double g : curve.abscissa) {
        curve.ordinate.push_back(cdf ? analytic::model_cdf(model, g, params, path)
                                     : analytic::model_pdf(model, g, params, path));
    }
    emit(c, out, curve);
}

void cmd_op(const RunConfig& c, std::ostream& out) {
    const ModelKind model = model_of(c);
    const double gamma_th = either(c.gamma_th, c.gamma_th_db, "gamma-th");
    if (c.grid.empty() == c.grid_db.empty()) {
        throw UsageError("op needs exactly one of --grid (linear gamma_bar) or --grid-db");
    }
    const bool db = !c.grid_db.empty();
    Curve curve;
    curve.meta.model = model;
    curve.meta.quantity = c.asymptotic ? Quantity::Other : Quantity::OutageProbability;
    curve.meta.abscissa_unit = db ? "gamma_bar_db" : "gamma_bar";
    curve.abscissa = parse_grid(db ? c.grid_db : c.grid).values();
    const EvalPath path = path_of(c, model);
    for (double x : curve.abscissa) {
        const double gbar = db ? db_to_linear(x) : x;
        const FadingParams params(c.k, c.m, gbar);
        double v = 0.0;
        if (c.asymptotic) {
            switch (model) {
            case ModelKind::FdRLoS:
                v = analytic::asymptotic_op(gamma_th, gbar, c.k, params.integer_m());
                break;
            case ModelKind::RicianShadowed:
                v = analytic::rs_asymptotic_op(gamma_th, gbar, c.k, c.m);
                break;
            default:
                throw UsageError("--asymptotic is available for fdrlos and rs only");
            }
        } else {
            v = analytic::model_cdf(model, gamma_th, params, path);
        }
        curve.ordinate.push_back(v);
    }
    emit(c, out, curve);
}

void cmd_sim(const RunConfig& c, std::ostream& out) {
    const ModelKind model = model_of(c);
    const FadingParams params(c.k, c.m, either(c.gamma_bar, c.gamma_bar_db, "gamma-bar"));
    if (c.samples == 0) throw UsageError("--samples must be >= 1");
    const SnrSampleSet set = sample_snr(model, params, c.samples, c.seed, {c.threads});
    if (!c.samples_output.empty()) {
        Sink raw(c.samples_output, out);
        write_samples_csv(raw.stream(), set.view());
        raw.finish();
    }
    const empirics::EmpiricalCdf ecdf(set);
    const EvalPath path = params.has_integer_m() || model != ModelKind::FdRLoS ? EvalPath::Auto
                                                                              : EvalPath::Oracle;
    const double gmax = ecdf.sorted().back();
    const empirics::TabulatedCdf reference(
        [&](double g) { return analytic::model_cdf(model, g, params, path); },
        std::max(gmax, 1e-300));
    const empirics::KsReport ks = empirics::ks_distance(ecdf, reference);
    const std::vector<double>& v = ecdf.sorted();
    const empirics::SampleMoments mom = empirics::sample_moments(v);

    Sink sink(c.output, out);
    std::ostream& os = sink.stream();
    os << "quantity,value\n";
    os << "n," << set.count() << '\n';
    os << "mean," << format_double(mom.mean) << '\n';
    os << "variance," << format_double(mom.variance) << '\n';
    os << "skewness," << format_double(mom.skewness) << '\n';
    os << "ks_statistic," << format_double(ks.statistic) << '\n';
    os << "ks_threshold," << format_double(ks.threshold) << '\n';
    os << "ks_pass," << (ks.pass ? 1 : 0) << '\n';
    sink.finish();
}

void cmd_figure(const RunConfig& c, std::ostream& out, std::optional<std::size_t> samples) {
    std::string dir = c.output_dir;
    if (dir.empty()) {
        const char* env = std::getenv(kOutputDirEnv);
        dir = env != nullptr && *env != '\0' ? env : ".";
    }
    for (const auto& path : write_figure(c.figure, dir, samples, c.threads)) {
        out << path.string() << '\n';
    }
}

void add_params(CLI::App* sub, RunConfig& c, bool gamma_bar) {
    sub->add_option("--model", c.model, "rician, rs, drlos or fdrlos")->capture_default_str();
    sub->add_option("--k", c.k, "Rician K factor (linear, >= 0)")->capture_default_str();
    sub->add_option("--m", c.m, "LoS fluctuation shape (> 0)")->capture_default_str();
    if (gamma_bar) {
        sub->add_option("--gamma-bar", c.gamma_bar, "average SNR (linear)");
        sub->add_option("--gamma-bar-db", c.gamma_bar_db, "average SNR (dB)");
    }
    sub->add_option("--output", c.output, "output file (default stdout)");
}

}  // namespace

std::vector<double> GridSpec::values() const {
    return log ? logspace(lo, hi, points) : linspace(lo, hi, points);
}

GridSpec parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3 && parts.size() != 4) {
        throw DomainError("grid '" + text + "' must look like min:max:points[:lin|log]");
    }
    GridSpec g;
    g.lo = parse_number(parts[0], "grid min");
    g.hi = parse_number(parts[1], "grid max");
    const double n = parse_number(parts[2], "grid points");
    if (!(n >= 2.0) || n != std::floor(n) || n > 1e8) {
        throw DomainError("grid points must be an integer >= 2");
    }
    g.points = static_cast<std::size_t>(n);
    if (parts.size() == 4) {
        if (parts[3] == "log") {
            g.log = true;
        } else if (parts[3] != "lin") {
            throw DomainError("grid spacing must be lin or log");
        }
    }
    if (!(g.lo < g.hi)) throw DomainError("grid needs min < max");
    if (g.log && !(g.lo > 0.0)) throw DomainError("log grid needs min > 0");
    return g;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    std::size_t figure_samples = 0;
    CLI::App app{"fdrlos: fading SNR laws, outage probability and Monte-Carlo checks", "fdrlos"};
    app.require_subcommand(1);

    auto* pdf = app.add_subcommand("pdf", "SNR density on a grid of gamma");
    auto* cdf = app.add_subcommand("cdf", "SNR CDF on a grid of gamma");
    for (auto* sub : {pdf, cdf}) {
        add_params(sub, c, true);
        sub->add_option("--grid", c.grid, "gamma grid min:max:points[:lin|log]")->required();
        sub->add_flag("--oracle", c.oracle, "use the quadrature reference instead of closed forms");
    }

    auto* op = app.add_subcommand("op", "outage probability versus average SNR");
    add_params(op, c, false);
    op->add_option("--gamma-th", c.gamma_th, "SNR threshold (linear)");
    op->add_option("--gamma-th-db", c.gamma_th_db, "SNR threshold (dB)");
    op->add_option("--grid", c.grid, "linear gamma_bar grid min:max:points[:lin|log]");
    op->add_option("--grid-db", c.grid_db, "gamma_bar grid in dB, min:max:points");
    op->add_flag("--oracle", c.oracle, "use the quadrature reference instead of closed forms");
    op->add_flag("--asymptotic", c.asymptotic, "high-SNR asymptote instead of the exact OP");

    auto* sim = app.add_subcommand("sim", "Monte-Carlo samples, moments and KS check");
    add_params(sim, c, true);
    sim->add_option("--samples", c.samples, "sample count")->capture_default_str();
    sim->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
    sim->add_option("--threads", c.threads, "worker threads (0 = all cores)")->capture_default_str();
    sim->add_option("--samples-output", c.samples_output, "write the raw samples to this CSV");

    auto* fig = app.add_subcommand("figure", "write the CSV files of a figure preset");
    fig->add_option("name", c.figure, "fig1, fig3, fig4 or fig5")->required();
    fig->add_option("--output-dir", c.output_dir,
                    std::string("directory for the CSV files (default $") + kOutputDirEnv +
                        " or .)");
    fig->add_option("--samples", figure_samples, "override the preset Monte-Carlo sample count");
    fig->add_option("--threads", c.threads, "worker threads (0 = all cores)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (pdf->parsed()) {
            cmd_density_or_cdf(c, out, false);
        } else if (cdf->parsed()) {
            cmd_density_or_cdf(c, out, true);
        } else if (op->parsed()) {
            cmd_op(c, out);
        } else if (sim->parsed()) {
            cmd_sim(c, out);
        } else if (fig->parsed()) {
            cmd_figure(c, out,
                       figure_samples > 0 ? std::optional<std::size_t>(figure_samples)
                                          : std::nullopt);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DivergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const AccuracyError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace fdrlos::cli
