#pragma once

#include "acovdiff/signal.hpp"

namespace acovdiff::theory {

/// Point prediction together with the audit breakdown of its leading
/// terms. `remainder_order` is the magnitude of the first neglected term
/// (unknown constant); it is reported, never added to the value.
struct AsymptoticPrediction {
    double value = 0.0;
    double main = 0.0;
    double jump_correction = 0.0;
    double remainder_order = 0.0;
};

/// E[Q_{1,m+1}] expansion: gamma0 + (m+1) J_K / (4 n_m) with
/// n_m = n - (m+1); remainder of order (m+1) J_K^tv / n^2.
AsymptoticPrediction predict_mean_gamma0(double gamma0, long m, long n, double jk,
                                         double jk_tv = 0.0);

/// E[Q_{1,h}(y;(1,-1))] expansion: gamma0 - gammah + h J_K / (4 n_h) with
/// n_h = n - h; remainder of order h J_K^tv / (4 n_h^2).
AsymptoticPrediction predict_mean_qh(double gamma0, double gammah, long h, long n, double jk,
                                     double jk_tv = 0.0);

/// VAR(gamma0-hat) expansion: (2m+3) gamma0^2 / n + (m+1)(m+2) gamma0 J_K / n^2.
/// Derived under Gaussian errors; no dependence on the difference scheme.
AsymptoticPrediction predict_var_gamma0(double gamma0, long m, long n, double jk);

/// The three order terms of VAR(gammah-hat): {J_K/n^2, H_{K,h}/n^3, 1/n}.
/// Magnitudes only; the absolute constants are not claimed.
struct VarianceOrderBreakdown {
    double jump_term;
    double weighted_jump_term;
    double base_term;
};
VarianceOrderBreakdown predict_var_gammah_order(double gamma0, long m, long h, long n, double jk,
                                                double hkh);

/// Ratios K_n / n^{1/2-eps} and max_jump / n^{eps/2} for the root-n
/// consistency regime; both must shrink along a sequence of n for the
/// regime to apply. A single evaluation is descriptive only.
struct RootnDiagnostic {
    double changepoint_ratio;
    double max_jump_ratio;
};
RootnDiagnostic check_rootn_regime(long changepoints, double max_jump, long n, double eps);

/// The two bias order-term magnitudes of a general order-l scheme:
///   tv_term = (m+1) J_K^tv / (2 n' ^2 p(d)) * sum_{r<l} |sum_{q<=r} d_q|
///   qv_term = (m+1) J_K P_l(d) / (2 n' p(d)),   n' = n - l(m+1).
/// Requires sum d_s = 0.
struct BiasOrderBreakdown {
    double tv_term;
    double qv_term;
};
BiasOrderBreakdown predict_bias_general(const DifferenceScheme& scheme, long m, long n, double jk,
                                        double jk_tv);

}  // namespace acovdiff::theory
