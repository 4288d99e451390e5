#pragma once

#include <span>
#include <string>
#include <vector>

#include "acovdiff/signal.hpp"

namespace acovdiff {

/// Result of an autocovariance estimation run. `gamma[h]` is the lag-h
/// autocovariance estimate for h = 0..m; `rho[h] = gamma[h]/gamma[0]`
/// (with rho[0] = 1) is present only when gamma[0] > 0, otherwise the
/// estimate is flagged and rho is empty.
struct AcfEstimate {
    enum class Method { Difference, Hvk };

    std::vector<double> gamma;
    std::vector<double> rho;
    bool flagged = false;

    long n = 0;
    long m = 0;
    Method method = Method::Difference;
    std::string scheme;  // human-readable estimator configuration

    long maxlag() const { return static_cast<long>(gamma.size()) - 1; }
};

/// Difference-based variance quadratic form
///   Q(y; d) = (p(d) n')^{-1} sum_{i=1}^{n'} (sum_s d_s y_{i + s*gap})^2,
/// with n' = n - l*gap. Always nonnegative. Throws std::length_error when
/// the series is shorter than l*gap + 1.
double quadratic_form(std::span<const double> y, const DifferenceScheme& scheme);

/// Lag-0 estimator: the order-1, gap-(m+1) quadratic form with weights
/// (d0, d1), requiring d0 + d1 = 0 and d0 != 0. Invariant under common
/// scaling of (d0, d1).
double estimate_gamma0(std::span<const double> y, long m, double d0 = 1.0, double d1 = -1.0);

/// Lag-h estimator for 1 <= h <= m: the gap-(m+1) quadratic form minus the
/// order-1 gap-h form with weights (1,-1). May be negative.
double estimate_gamma_h(std::span<const double> y, long m, long h, double d0 = 1.0,
                        double d1 = -1.0);

/// Full difference-based estimate of gamma_0..gamma_m and the derived
/// autocorrelations.
AcfEstimate estimate_acf(std::span<const double> y, long m, double d0 = 1.0, double d1 = -1.0);

/// Hall-Van Keilegom style baseline: theta(k) = (2(n-k))^{-1} sum (y_{i+k}-y_i)^2,
/// gamma0 = average of theta(k) over k in [m1, m2] with m1 = floor(n^0.4),
/// m2 = floor(sqrt(n)), and gamma_h = gamma0 - theta(h).
AcfEstimate estimate_acf_hvk(std::span<const double> y, long maxlag);

/// Smoothing window [m1, m2] the baseline uses for a given sample size.
struct HvkWindow {
    long m1;
    long m2;
};
HvkWindow hvk_window(long n);

}  // namespace acovdiff
