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

#ifndef FDRLOS_ANALYTIC_HPP
#define FDRLOS_ANALYTIC_HPP

#include "fdrlos/params.hpp"
#include "fdrlos/quadrature.hpp"

#include <vector>

/// Probability laws of the instantaneous SNR.
///
/// Conventions shared by every function here:
///  - all SNR arguments are linear (no dB);
///  - "conditional" Rician shadowed arguments (k_x, gamma_bar_x) are the
///    parameters of the FdRLoS model conditioned on x = |G3|^2, i.e.
///    k_x = K / x and gamma_bar_x = gamma_bar (K + x) / (K + 1);
///  - closed forms require a positive integer m and throw DomainError
///    otherwise; the *_oracle functions accept any real m > 0.
namespace fdrlos::analytic {

using specfun::QuadratureConfig;

/// Tolerances used inside the closed forms for each generalized incomplete
/// gamma evaluation (rel 1e-13).
QuadratureConfig closed_form_quadrature();
/// Defaults for the conditional-averaging oracles (rel 1e-10).
QuadratureConfig oracle_quadrature();

// ---------------------------------------------------------------- Rician shadowed

/// Finite Erlang-mixture representation of the Rician shadowed SNR law for
/// integer m:  f(g) = sum_j C_j g^(m-j-1) e^(-g/omega) / ((m-j-1)! omega^(m-j)).
/// The weights are binomial probabilities, so C_j >= 0 and sum_j C_j = 1.
struct RsMixtureTerms {
    std::vector<double> coefficients;  // C_0 .. C_{m-1}
    double omega = 0.0;

    int m() const noexcept { return static_cast<int>(coefficients.size()); }
    double pdf(double gamma) const;
    double cdf(double gamma) const;
};

/// Mixture terms from conditional parameters (k_x, gamma_bar_x).
RsMixtureTerms rs_mixture_terms(double k_x, int m, double gamma_bar_x);

/// Mixture terms at conditioning value x of the FdRLoS model (K, m, gamma_bar):
/// C_j(x) = binom(m-1, j) (m x/(m x + K))^j (K/(K + m x))^(m-1-j),
/// omega(x) = gamma_bar (K + m x) / (m (K + 1)).
RsMixtureTerms rs_pdf_integer_terms(double x, double k, int m, double gamma_bar);

/// Rician shadowed SNR density through Kummer's function (any real m > 0).
double rs_pdf(double gamma, double k_x, double m, double gamma_bar_x);
/// Rician shadowed SNR density through the Erlang mixture (integer m).
double rs_pdf_integer(double gamma, double k_x, int m, double gamma_bar_x);
/// Rician shadowed SNR CDF for integer m (finite Erlang mixture).
double rs_cdf_integer(double gamma, double k_x, int m, double gamma_bar_x);
/// Rician shadowed SNR CDF, any real m > 0 (quadrature of rs_pdf unless m is integer).
double rs_cdf(double gamma, double k_x, double m, double gamma_bar_x,
              const QuadratureConfig& cfg = oracle_quadrature());
/// High-SNR Rician shadowed outage: (gamma_th / gamma_bar) (1 + K) (m / (K + m))^m.
double rs_asymptotic_op(double gamma_th, double gamma_bar, double k, double m);

// ------------------------------------------------------------------------ FdRLoS

/// A value together with an underflow flag: results below 1e-300 are
/// reported as 0 with `underflow` set.
struct Evaluation {
    double value = 0.0;
    bool underflow = false;
};

/// Which inner summation limit the closed-form CDF uses. `Rederived` runs the
/// innermost binomial sum over s = 0..j, as obtained by expanding (t - K/m)^j.
/// `AsPrinted` keeps the alternative limit s = 0..m-j-1 and exists only so the
/// two can be compared against the oracle.
enum class CdfIndexing { Rederived, AsPrinted };

/// Closed-form FdRLoS density (integer m). K = 0 is routed to the oracle.
double fdrlos_pdf(double gamma, const FadingParams& params);
Evaluation fdrlos_pdf_eval(double gamma, const FadingParams& params);

/// Reference density: int_0^inf f_RS(gamma; K/x, m, gamma_bar_x) e^(-x) dx.
double fdrlos_pdf_oracle(double gamma, const FadingParams& params,
                         const QuadratureConfig& cfg = oracle_quadrature());

/// Closed-form FdRLoS CDF (integer m). K = 0 is routed to the oracle.
double fdrlos_cdf(double gamma, const FadingParams& params,
                  CdfIndexing indexing = CdfIndexing::Rederived);
Evaluation fdrlos_cdf_eval(double gamma, const FadingParams& params,
                           CdfIndexing indexing = CdfIndexing::Rederived);

/// Reference CDF: int_0^inf F_RS(gamma; K/x, m, gamma_bar_x) e^(-x) dx.
double fdrlos_cdf_oracle(double gamma, const FadingParams& params,
                         const QuadratureConfig& cfg = oracle_quadrature());

// -------------------------------------------------------------------- outage

/// P(gamma < gamma_th) = fdrlos_cdf(gamma_th, params).
double outage_probability(double gamma_th, const FadingParams& params);

/// Power offset a = (1 + K) Gamma(m) U(m, 1, K/m) of the high-SNR outage law.
/// Throws DivergenceError for K = 0, where U(m, 1, K/m) is unbounded.
double coding_gain(double k, int m, const QuadratureConfig& cfg = closed_form_quadrature());

/// a * gamma_th / gamma_bar: diversity order one. Throws DivergenceError for K = 0.
double asymptotic_op(double gamma_th, double gamma_bar, double k, int m);

// ----------------------------------------------------------------- ancestors

/// Rician SNR density (deterministic LoS, single Gaussian diffuse term).
double rician_pdf(double gamma, double k, double gamma_bar);
/// Rician SNR CDF by quadrature of the amplitude density.
double rician_cdf(double gamma, double k, double gamma_bar,
                  const QuadratureConfig& cfg = oracle_quadrature());

/// dRLoS density by averaging the Rician law over x = |G3|^2 (xi = 1).
double drlos_pdf_oracle(double gamma, double k, double gamma_bar,
                        const QuadratureConfig& cfg = oracle_quadrature());
/// dRLoS CDF by averaging the Rician CDF over x = |G3|^2 (xi = 1).
double drlos_cdf_oracle(double gamma, double k, double gamma_bar,
                        const QuadratureConfig& cfg = oracle_quadrature());

/// The dRLoS density cusp: the LoS-only SNR gamma_bar K / (K + 1).
double drlos_mode(double k, double gamma_bar);

// ------------------------------------------------------------------- dispatch

enum class EvalPath { Auto, ClosedForm, Oracle };

/// Density of `model` at gamma. Auto picks the closed form where one exists.
double model_pdf(ModelKind model, double gamma, const FadingParams& params,
                 EvalPath path = EvalPath::Auto);
/// CDF of `model` at gamma.
double model_cdf(ModelKind model, double gamma, const FadingParams& params,
                 EvalPath path = EvalPath::Auto);

}  // namespace fdrlos::analytic

#endif  // FDRLOS_ANALYTIC_HPP
