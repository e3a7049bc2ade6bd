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


#include "commands.hpp"

#include "fdrlos/analytic.hpp"
#include "fdrlos/empirics.hpp"
#include "fdrlos/errors.hpp"
#include "fdrlos/models.hpp"
#include "fdrlos_cli/csv.hpp"
#include "fdrlos_cli/presets.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <string_view>

namespace fdrlos::cli {

namespace {

namespace fs = std::filesystem;
using analytic::EvalPath;

class FigureWriter {
public:
    explicit FigureWriter(fs::path dir) : dir_(std::move(dir)) {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) throw std::runtime_error("cannot create " + dir_.string() + ": " + ec.message());
    }

    void write(const std::string& name, Curve curve) {
        curve.meta.label = name;
        curve.validate();
        const fs::path path = dir_ / (name + ".csv");
        std::ofstream os(path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
        write_curve_csv(os, curve);
        os.close();
        if (!os) throw std::runtime_error("write failed: " + path.string());
        written_.push_back(path);
    }

    std::vector<fs::path> take() { return std::move(written_); }

private:
    fs::path dir_;
    std::vector<fs::path> written_;
};

Curve tabulate(const std::vector<double>& x, Quantity q, const std::string& unit,
               const auto& fn) {
    Curve c;
    c.abscissa = x;
    c.meta.quantity = q;
    c.meta.abscissa_unit = unit;
    c.ordinate.reserve(x.size());
    for (double v : x) c.ordinate.push_back(fn(v));
    return c;
}

std::string suffix_m(int m) { return "_m" + std::to_string(m); }

// OP(gamma_bar) = P(|S|^2 < gamma_th / gamma_bar) from unit-gamma_bar samples.
Curve mc_outage(ModelKind model, double k, int m, double gamma_th, double db_min, double db_max,
                double db_step, std::size_t n, std::uint64_t seed, unsigned threads) {
    const SnrSampleSet s = sample_snr(model, FadingParams(k, m, 1.0), n, seed, {threads});
    const empirics::EmpiricalCdf ecdf(s);
    const auto points = static_cast<std::size_t>(std::llround((db_max - db_min) / db_step)) + 1;
    return tabulate(linspace(db_min, db_max, points), Quantity::OutageProbability,
                    "gamma_bar_db",
                    [&](double db) { return ecdf(gamma_th / db_to_linear(db)); });
}

void fig1(FigureWriter& w, std::optional<std::size_t> samples, unsigned threads) {
    const presets::Fig1 p;
    const std::vector<double> grid = linspace(0.0, p.gamma_max, p.curve_points);
    for (int m : p.m) {
        const FadingParams fp(p.k, m, p.gamma_bar);
        Curve pdf = tabulate(grid, Quantity::Density, "gamma",
                             [&](double g) { return analytic::fdrlos_pdf(g, fp); });
        pdf.meta.model = ModelKind::FdRLoS;
        pdf.meta.params = fp;
        w.write("fig1_fdrlos_pdf" + suffix_m(m), std::move(pdf));

        const SnrSampleSet s = sample_snr(ModelKind::FdRLoS, fp, samples.value_or(p.samples),
                                          p.seed + static_cast<std::uint64_t>(m), {threads});
        Curve hist = empirics::histogram_density(s.view(), p.bin_width, 0.0, p.gamma_max);
        hist.meta.model = ModelKind::FdRLoS;
        hist.meta.params = fp;
        w.write("fig1_mc_hist" + suffix_m(m), std::move(hist));
    }
    Curve limit = tabulate(grid, Quantity::Density, "gamma", [&](double g) {
        return analytic::drlos_pdf_oracle(g, p.k, p.gamma_bar);
    });
    limit.meta.model = ModelKind::DRLoS;
    w.write("fig1_drlos_pdf", std::move(limit));
}

void fig3(FigureWriter& w, std::optional<std::size_t> samples, unsigned threads) {
    const presets::Fig3 p;
    const std::vector<double> db = linspace(p.db_min, p.db_max, p.points);
    for (int m : p.m) {
        w.write("fig3_fdrlos_op" + suffix_m(m),
                tabulate(db, Quantity::OutageProbability, "gamma_bar_db", [&](double d) {
                    return analytic::outage_probability(p.gamma_th,
                                                        FadingParams(p.k, m, db_to_linear(d)));
                }));
        w.write("fig3_asymptotic_op" + suffix_m(m),
                tabulate(db, Quantity::Other, "gamma_bar_db", [&](double d) {
                    return analytic::asymptotic_op(p.gamma_th, db_to_linear(d), p.k, m);
                }));
        w.write("fig3_mc_op" + suffix_m(m),
                mc_outage(ModelKind::FdRLoS, p.k, m, p.gamma_th, p.db_min, p.db_max,
                          p.mc_db_step, samples.value_or(p.samples),
                          p.seed + static_cast<std::uint64_t>(m), threads));
    }
    w.write("fig3_drlos_op", tabulate(db, Quantity::OutageProbability, "gamma_bar_db",
                                      [&](double d) {
                                          return analytic::drlos_cdf_oracle(p.gamma_th, p.k,
                                                                            db_to_linear(d));
                                      }));
}

void fig4(FigureWriter& w, std::optional<std::size_t> samples, unsigned threads) {
    const presets::Fig4 p;
    const std::vector<double> db = linspace(p.db_min, p.db_max, p.points);
    for (int m : p.m) {
        w.write("fig4_fdrlos_op" + suffix_m(m),
                tabulate(db, Quantity::OutageProbability, "gamma_bar_db", [&](double d) {
                    return analytic::outage_probability(p.gamma_th,
                                                        FadingParams(p.k, m, db_to_linear(d)));
                }));
        w.write("fig4_rs_op" + suffix_m(m),
                tabulate(db, Quantity::OutageProbability, "gamma_bar_db", [&](double d) {
                    return analytic::rs_cdf_integer(p.gamma_th, p.k, m, db_to_linear(d));
                }));
        w.write("fig4_mc_op" + suffix_m(m),
                mc_outage(ModelKind::FdRLoS, p.k, m, p.gamma_th, p.db_min, p.db_max,
                          p.mc_db_step, samples.value_or(p.samples),
                          p.seed + static_cast<std::uint64_t>(m), threads));
    }
}

void fig5(FigureWriter& w) {
    const presets::Fig5 p;
    const std::vector<double> ks = linspace(p.k_min, p.k_max, p.points);
    const double gbar = db_to_linear(p.gamma_bar_db);
    for (int m : p.m) {
        w.write("fig5_fdrlos_op" + suffix_m(m),
                tabulate(ks, Quantity::OutageProbability, "K", [&](double k) {
                    return analytic::outage_probability(p.gamma_th, FadingParams(k, m, gbar));
                }));
        w.write("fig5_rs_op" + suffix_m(m),
                tabulate(ks, Quantity::OutageProbability, "K", [&](double k) {
                    return analytic::rs_cdf_integer(p.gamma_th, k, m, gbar);
                }));
    }
}

}  // namespace

std::vector<fs::path> write_figure(const std::string& name, const fs::path& dir,
                                   std::optional<std::size_t> samples, unsigned threads) {
    FigureWriter w(dir);
    if (name == "fig1") {
        fig1(w, samples, threads);
    } else if (name == "fig3") {
        fig3(w, samples, threads);
    } else if (name == "fig4") {
        fig4(w, samples, threads);
    } else if (name == "fig5") {
        fig5(w);
    } else {
        throw DomainError("unknown figure '" + name + "' (expected fig1, fig3, fig4 or fig5)");
    }
    return w.take();
}

}  // namespace fdrlos::cli
