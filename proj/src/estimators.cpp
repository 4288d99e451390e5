#include "acovdiff/estimators.hpp"

#include <cmath>
#include <stdexcept>

namespace acovdiff {

namespace {

void require_estimation_pair(double d0, double d1) {
    if (d0 == 0.0 || d0 + d1 != 0.0) {
        throw std::invalid_argument("difference estimator requires d0 + d1 = 0 with d0 != 0");
    }
}

std::string pair_label(double d0, double d1) {
    return "d=(" + std::to_string(d0) + "," + std::to_string(d1) + ")";
}

}  // namespace

double quadratic_form(std::span<const double> y, const DifferenceScheme& scheme) {
    const long n = static_cast<long>(y.size());
    const long l = scheme.order();
    const long gap = scheme.gap();
    const long count = n - l * gap;
    if (count < 1) {
        throw std::length_error("quadratic_form: series of length " + std::to_string(n) +
                                " too short for order " + std::to_string(l) + ", gap " +
                                std::to_string(gap));
    }
    const auto& d = scheme.weights();
    double sum = 0.0;
    for (long i = 0; i < count; ++i) {
        double diff = 0.0;
        for (long s = 0; s <= l; ++s) {
            diff += d[static_cast<std::size_t>(s)] * y[static_cast<std::size_t>(i + s * gap)];
        }
        sum += diff * diff;
    }
    return sum / (scheme.normalizer() * static_cast<double>(count));
}

double estimate_gamma0(std::span<const double> y, long m, double d0, double d1) {
    if (m < 0) throw std::invalid_argument("estimate_gamma0: m must be nonnegative");
    require_estimation_pair(d0, d1);
    return quadratic_form(y, DifferenceScheme({d0, d1}, m + 1));
}

double estimate_gamma_h(std::span<const double> y, long m, long h, double d0, double d1) {
    if (h < 1 || h > m) {
        throw std::invalid_argument("estimate_gamma_h: lag h must satisfy 1 <= h <= m");
    }
    return estimate_gamma0(y, m, d0, d1) -
           quadratic_form(y, DifferenceScheme({1.0, -1.0}, h));
}

AcfEstimate estimate_acf(std::span<const double> y, long m, double d0, double d1) {
    if (m < 0) throw std::invalid_argument("estimate_acf: m must be nonnegative");
    require_estimation_pair(d0, d1);
    AcfEstimate est;
    est.n = static_cast<long>(y.size());
    est.m = m;
    est.method = AcfEstimate::Method::Difference;
    est.scheme = pair_label(d0, d1) + " gap=" + std::to_string(m + 1);

    est.gamma.resize(static_cast<std::size_t>(m) + 1);
    est.gamma[0] = estimate_gamma0(y, m, d0, d1);
    for (long h = 1; h <= m; ++h) {
        est.gamma[static_cast<std::size_t>(h)] =
            est.gamma[0] - quadratic_form(y, DifferenceScheme({1.0, -1.0}, h));
    }

    if (est.gamma[0] > 0.0) {
        est.rho.resize(est.gamma.size());
        est.rho[0] = 1.0;
        for (long h = 1; h <= m; ++h) {
            est.rho[static_cast<std::size_t>(h)] =
                est.gamma[static_cast<std::size_t>(h)] / est.gamma[0];
        }
    } else {
        est.flagged = true;  // gamma0 = 0 happens for constant input
    }
    return est;
}

HvkWindow hvk_window(long n) {
    if (n < 2) throw std::length_error("hvk_window: n must be at least 2");
    const long m1 = static_cast<long>(std::floor(std::pow(static_cast<double>(n), 0.4)));
    const long m2 = static_cast<long>(std::floor(std::sqrt(static_cast<double>(n))));
    return {m1, m2};
}

AcfEstimate estimate_acf_hvk(std::span<const double> y, long maxlag) {
    const long n = static_cast<long>(y.size());
    if (maxlag < 0) throw std::invalid_argument("estimate_acf_hvk: maxlag must be nonnegative");
    const auto [m1, m2] = hvk_window(n);
    if (m1 < 1 || m1 >= m2 || m2 >= n) {
        throw std::length_error("estimate_acf_hvk: series too short for smoothing window [" +
                                std::to_string(m1) + "," + std::to_string(m2) + "]");
    }
    if (maxlag >= m1) {
        throw std::length_error("estimate_acf_hvk: maxlag must stay below m1 = " +
                                std::to_string(m1));
    }

    // theta(k) = (2(n-k))^{-1} sum_{i=1}^{n-k} (y_{i+k} - y_i)^2 for k = 1..m2.
    std::vector<double> theta(static_cast<std::size_t>(m2) + 1, 0.0);
    for (long k = 1; k <= m2; ++k) {
        double sum = 0.0;
        for (long i = 0; i + k < n; ++i) {
            const double diff = y[static_cast<std::size_t>(i + k)] - y[static_cast<std::size_t>(i)];
            sum += diff * diff;
        }
        theta[static_cast<std::size_t>(k)] = sum / (2.0 * static_cast<double>(n - k));
    }

    AcfEstimate est;
    est.n = n;
    est.m = maxlag;
    est.method = AcfEstimate::Method::Hvk;
    est.scheme = "hvk m1=" + std::to_string(m1) + " m2=" + std::to_string(m2);

    double gamma0 = 0.0;
    for (long k = m1; k <= m2; ++k) gamma0 += theta[static_cast<std::size_t>(k)];
    gamma0 /= static_cast<double>(m2 - m1 + 1);

    est.gamma.resize(static_cast<std::size_t>(maxlag) + 1);
    est.gamma[0] = gamma0;
    for (long h = 1; h <= maxlag; ++h) {
        est.gamma[static_cast<std::size_t>(h)] = gamma0 - theta[static_cast<std::size_t>(h)];
    }

    if (gamma0 > 0.0) {
        est.rho.resize(est.gamma.size());
        est.rho[0] = 1.0;
        for (long h = 1; h <= maxlag; ++h) {
            est.rho[static_cast<std::size_t>(h)] = est.gamma[static_cast<std::size_t>(h)] / gamma0;
        }
    } else {
        est.flagged = true;
    }
    return est;
}

}  // namespace acovdiff
