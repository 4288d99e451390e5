#include "acovdiff/signal.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace acovdiff {

StepSignal::StepSignal(std::vector<double> levels, std::vector<double> breakpoints)
    : levels_(std::move(levels)), breakpoints_(std::move(breakpoints)) {
    if (levels_.empty()) {
        throw std::invalid_argument("StepSignal: at least one level required");
    }
    if (breakpoints_.size() != levels_.size() + 1) {
        throw std::invalid_argument("StepSignal: need one more breakpoint than levels");
    }
    if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
        throw std::invalid_argument("StepSignal: breakpoints must start at 0 and end at 1");
    }
    for (std::size_t j = 1; j < breakpoints_.size(); ++j) {
        if (!(breakpoints_[j - 1] < breakpoints_[j])) {
            throw std::invalid_argument("StepSignal: breakpoints must be strictly increasing");
        }
    }
    for (std::size_t j = 1; j < levels_.size(); ++j) {
        if (levels_[j - 1] == levels_[j]) {
            throw std::invalid_argument("StepSignal: adjacent levels must differ");
        }
    }
}

std::vector<long> StepSignal::jump_indices(long n) const {
    std::vector<long> t;
    t.reserve(levels_.size() - 1);
    for (std::size_t j = 1; j + 1 < breakpoints_.size(); ++j) {
        t.push_back(static_cast<long>(std::floor(static_cast<double>(n) * breakpoints_[j])));
    }
    return t;
}

double StepSignal::value_at(long i, long n) const {
    for (std::size_t j = 1; j + 1 < breakpoints_.size(); ++j) {
        const long t = static_cast<long>(std::floor(static_cast<double>(n) * breakpoints_[j]));
        if (i < t) return levels_[j - 1];
    }
    return levels_.back();
}

SmoothComponent::SmoothComponent(std::string name, std::function<double(double)> fn)
    : name_(std::move(name)), fn_(std::move(fn)) {}

SmoothComponent SmoothComponent::zero() {
    return SmoothComponent("zero", [](double) { return 0.0; });
}

SmoothComponent SmoothComponent::f1() {
    return SmoothComponent("f1", [](double x) { return 1.0 - 2.0 * x; });
}

SmoothComponent SmoothComponent::f2() {
    return SmoothComponent("f2", [](double x) { return 4.0 * (x - 0.5) * (x - 0.5) - 1.0 / 3.0; });
}

SmoothComponent SmoothComponent::f3() {
    return SmoothComponent("f3", [](double x) { return std::sin(16.0 * M_PI * x); });
}

SmoothComponent SmoothComponent::by_name(const std::string& name) {
    if (name == "zero") return zero();
    if (name == "f1") return f1();
    if (name == "f2") return f2();
    if (name == "f3") return f3();
    throw std::invalid_argument("unknown smooth component '" + name +
                                "' (expected zero, f1, f2 or f3)");
}

SmoothComponent SmoothComponent::custom(std::string name, std::function<double(double)> fn) {
    return SmoothComponent(std::move(name), std::move(fn));
}

DifferenceScheme::DifferenceScheme(std::vector<double> weights, long gap)
    : weights_(std::move(weights)), gap_(gap), normalizer_(0.0) {
    if (weights_.size() < 2) {
        throw std::invalid_argument("DifferenceScheme: order l must be at least 1");
    }
    if (gap_ < 1) {
        throw std::invalid_argument("DifferenceScheme: gap must be positive");
    }
    for (double d : weights_) normalizer_ += d * d;
    if (!(normalizer_ > 0.0)) {
        throw std::invalid_argument("DifferenceScheme: weights must not all be zero");
    }
}

double DifferenceScheme::weight_sum() const {
    double s = 0.0;
    for (double d : weights_) s += d;
    return s;
}

bool DifferenceScheme::annihilates_constants(double tol) const {
    return std::abs(weight_sum()) <= tol;
}

std::vector<double> evaluate_mean(const StepSignal& step, const SmoothComponent& smooth, long n) {
    if (n < 2) throw std::invalid_argument("evaluate_mean: n must be at least 2");
    std::vector<double> mean(static_cast<std::size_t>(n));
    // Walk the segments once instead of scanning breakpoints per sample.
    const auto jumps = step.jump_indices(n);
    std::size_t segment = 0;
    for (long i = 1; i <= n; ++i) {
        while (segment < jumps.size() && i >= jumps[segment]) ++segment;
        const double x = static_cast<double>(i) / static_cast<double>(n);
        mean[static_cast<std::size_t>(i - 1)] = smooth(x) + step.levels()[segment];
    }
    return mean;
}

double quadratic_variation(const StepSignal& step) {
    const auto& a = step.levels();
    double sum = 0.0;
    for (std::size_t j = 1; j < a.size(); ++j) {
        const double jump = a[j] - a[j - 1];
        sum += jump * jump;
    }
    return sum;
}

double total_variation(const StepSignal& step) {
    const auto& a = step.levels();
    double sum = 0.0;
    for (std::size_t j = 1; j < a.size(); ++j) sum += std::abs(a[j] - a[j - 1]);
    return sum;
}

double weighted_jump_functional(const StepSignal& step, long n, long h) {
    if (h < 1) throw std::invalid_argument("weighted_jump_functional: h must be positive");
    const auto& a = step.levels();
    const auto t = step.jump_indices(n);
    double sum = 0.0;
    for (std::size_t j = 1; j < a.size(); ++j) {
        sum += (static_cast<double>(t[j - 1]) - static_cast<double>(h) / 2.0) *
               std::abs(a[j - 1] - a[j]);
    }
    return sum;
}

double scheme_bias_polynomial(const DifferenceScheme& scheme) {
    const auto& d = scheme.weights();
    const long l = scheme.order();
    // Partial sums: partial[r] = d_0 + ... + d_r.
    std::vector<double> partial(static_cast<std::size_t>(l) + 1);
    double run = 0.0;
    for (std::size_t r = 0; r < partial.size(); ++r) {
        run += d[r];
        partial[r] = run;
    }
    double value = 0.0;
    for (long r = 0; r < l; ++r) {
        const double p = partial[static_cast<std::size_t>(r)];
        value += static_cast<double>(r + 1) * p * p;
    }
    for (long r = 0; r + 1 < l; ++r) {
        double tail = 0.0;
        for (long s = r + 1; s < l; ++s) tail += partial[static_cast<std::size_t>(s)];
        value += 2.0 * static_cast<double>(r + 1) * partial[static_cast<std::size_t>(r)] * tail;
    }
    return value;
}

bool check_jump_separation(const StepSignal& step, long n, long l, long m) {
    if (n < 1 || l < 1 || m < 0) {
        throw std::invalid_argument("check_jump_separation: need n >= 1, l >= 1, m >= 0");
    }
    if (step.segment_count() == 1) return true;  // no jumps, vacuously satisfied
    const auto& tau = step.breakpoints();
    const double required = static_cast<double>(l) * static_cast<double>(m + 1) /
                            static_cast<double>(n);
    for (std::size_t j = 1; j < tau.size(); ++j) {
        if (!(tau[j] - tau[j - 1] > required)) return false;
    }
    return true;
}

StepSignal six_jump_signal() {
    return StepSignal({0.0, 10.0, 0.0, 1.0, 0.0, 1.0, 0.0},
                      {0.0, 1.0 / 6 - 1.0 / 36, 1.0 / 6 + 1.0 / 36, 3.0 / 6 - 2.0 / 36,
                       3.0 / 6 + 2.0 / 36, 5.0 / 6 - 3.0 / 36, 5.0 / 6 + 3.0 / 36, 1.0});
}

}  // namespace acovdiff
