#include "acovdiff/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace acovdiff::theory {

AsymptoticPrediction predict_mean_gamma0(double gamma0, long m, long n, double jk,
                                         double jk_tv) {
    if (n <= m + 1) throw std::invalid_argument("predict_mean_gamma0: need n > m+1");
    const double nm = static_cast<double>(n - (m + 1));
    AsymptoticPrediction p;
    p.main = gamma0;
    p.jump_correction = static_cast<double>(m + 1) * jk / (4.0 * nm);
    p.value = p.main + p.jump_correction;
    p.remainder_order = static_cast<double>(m + 1) * jk_tv /
                        (static_cast<double>(n) * static_cast<double>(n));
    return p;
}

AsymptoticPrediction predict_mean_qh(double gamma0, double gammah, long h, long n, double jk,
                                     double jk_tv) {
    if (n <= h) throw std::invalid_argument("predict_mean_qh: need n > h");
    const double nh = static_cast<double>(n - h);
    AsymptoticPrediction p;
    p.main = gamma0 - gammah;
    p.jump_correction = static_cast<double>(h) * jk / (4.0 * nh);
    p.value = p.main + p.jump_correction;
    p.remainder_order = static_cast<double>(h) * jk_tv / (4.0 * nh * nh);
    return p;
}

AsymptoticPrediction predict_var_gamma0(double gamma0, long m, long n, double jk) {
    if (n <= m + 1) throw std::invalid_argument("predict_var_gamma0: need n > m+1");
    const double dn = static_cast<double>(n);
    AsymptoticPrediction p;
    p.main = static_cast<double>(2 * m + 3) * gamma0 * gamma0 / dn;
    p.jump_correction =
        static_cast<double>((m + 1) * (m + 2)) * gamma0 * jk / (dn * dn);
    p.value = p.main + p.jump_correction;
    p.remainder_order = 1.0 / (dn * dn);
    return p;
}

VarianceOrderBreakdown predict_var_gammah_order(double gamma0, long m, long h, long n, double jk,
                                                double hkh) {
    if (h < 1 || h > m) {
        throw std::invalid_argument("predict_var_gammah_order: need 1 <= h <= m");
    }
    (void)gamma0;
    const double dn = static_cast<double>(n);
    return {jk / (dn * dn), hkh / (dn * dn * dn), 1.0 / dn};
}

RootnDiagnostic check_rootn_regime(long changepoints, double max_jump, long n, double eps) {
    if (!(eps > 0.0 && eps < 0.5)) {
        throw std::invalid_argument("check_rootn_regime: eps must lie in (0, 1/2)");
    }
    const double dn = static_cast<double>(n);
    return {static_cast<double>(changepoints) / std::pow(dn, 0.5 - eps),
            max_jump / std::pow(dn, eps / 2.0)};
}

BiasOrderBreakdown predict_bias_general(const DifferenceScheme& scheme, long m, long n, double jk,
                                        double jk_tv) {
    if (!scheme.annihilates_constants()) {
        throw std::invalid_argument("predict_bias_general: scheme weights must sum to zero");
    }
    const long l = scheme.order();
    const double count = static_cast<double>(n - l * (m + 1));
    if (count < 1.0) throw std::invalid_argument("predict_bias_general: need n > l(m+1)");
    const double p = scheme.normalizer();

    double partial_abs_sum = 0.0;
    double run = 0.0;
    for (long r = 0; r < l; ++r) {
        run += scheme.weights()[static_cast<std::size_t>(r)];
        partial_abs_sum += std::abs(run);
    }

    BiasOrderBreakdown out;
    out.tv_term = static_cast<double>(m + 1) * jk_tv * partial_abs_sum / (2.0 * count * count * p);
    out.qv_term = static_cast<double>(m + 1) * jk * scheme_bias_polynomial(scheme) / (2.0 * count * p);
    return out;
}

}  // namespace acovdiff::theory
