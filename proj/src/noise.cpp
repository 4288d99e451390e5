#include "acovdiff/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace acovdiff {

ErrorModel ErrorModel::ma1(double gamma1, Innovation innovation) {
    if (!(std::abs(gamma1) <= 0.5)) {
        throw std::domain_error("ErrorModel::ma1: |gamma1| must be at most 1/2");
    }
    return ErrorModel(Kind::Ma1Dependent, innovation, gamma1, 0.0);
}

ErrorModel ErrorModel::ar1(double phi) {
    if (!(std::abs(phi) < 1.0)) {
        throw std::domain_error("ErrorModel::ar1: |phi| must be below 1");
    }
    return ErrorModel(Kind::Ar1, Innovation::Gaussian, 0.0, phi);
}

std::string ErrorModel::describe() const {
    if (kind_ == Kind::Ma1Dependent) {
        return "ma1(gamma1=" + std::to_string(gamma1_) +
               (innovation_ == Innovation::Gaussian ? ",gaussian)" : ",t4)");
    }
    return "ar1(phi=" + std::to_string(phi_) + ")";
}

MaCoefficients ma_coefficients(double gamma1) {
    if (!(std::abs(gamma1) <= 0.5)) {
        throw std::domain_error("ma_coefficients: |gamma1| must be at most 1/2");
    }
    const double plus = std::sqrt(1.0 + 2.0 * gamma1);
    const double minus = std::sqrt(1.0 - 2.0 * gamma1);
    return {(plus + minus) / 2.0, (plus - minus) / 2.0};
}

std::vector<double> true_acf(const ErrorModel& model, long maxlag) {
    if (maxlag < 0) throw std::invalid_argument("true_acf: maxlag must be nonnegative");
    std::vector<double> gamma(static_cast<std::size_t>(maxlag) + 1, 0.0);
    if (model.kind() == ErrorModel::Kind::Ma1Dependent) {
        const double innovation_var = model.innovation() == Innovation::Gaussian ? 1.0 : 2.0;
        gamma[0] = innovation_var;
        if (maxlag >= 1) gamma[1] = model.gamma1() * innovation_var;
    } else {
        const double phi = model.phi();
        const double marginal_var = 1.0 / (1.0 - phi * phi);
        double power = 1.0;
        for (long h = 0; h <= maxlag; ++h) {
            gamma[static_cast<std::size_t>(h)] = power * marginal_var;
            power *= phi;
        }
    }
    return gamma;
}

std::vector<double> NoiseStream::generate(long n) const {
    if (n < 1) throw std::invalid_argument("NoiseStream::generate: n must be positive");
    rng::RandomStream stream(seed_, stream_, /*role=*/0);
    std::vector<double> eps(static_cast<std::size_t>(n));
    if (model_.kind() == ErrorModel::Kind::Ma1Dependent) {
        const auto [r0, r1] = ma_coefficients(model_.gamma1());
        const bool gaussian = model_.innovation() == Innovation::Gaussian;
        // n+1 innovations delta_0..delta_n give an exactly stationary
        // 1-dependent sequence; no burn-in.
        double previous = gaussian ? stream.normal() : stream.student_t4();
        for (long i = 0; i < n; ++i) {
            const double current = gaussian ? stream.normal() : stream.student_t4();
            eps[static_cast<std::size_t>(i)] = r0 * current + r1 * previous;
            previous = current;
        }
    } else {
        const double phi = model_.phi();
        // Exact stationary start: eps_0 ~ N(0, 1/(1-phi^2)).
        double value = stream.normal() / std::sqrt(1.0 - phi * phi);
        for (long i = 0; i < n; ++i) {
            value = phi * value + stream.normal();
            eps[static_cast<std::size_t>(i)] = value;
        }
    }
    return eps;
}

}  // namespace acovdiff
