#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace acovdiff {

/// Piecewise-constant mean component: levels a_0..a_{K-1} on segments
/// delimited by breakpoint fractions 0 = tau_0 < ... < tau_K = 1.
///
/// On a grid of n samples the segment boundaries are t_j = floor(n * tau_j)
/// and segments are half-open [t_{j-1}, t_j) in index space, with the last
/// segment extended to include i = n. All jump functionals below use the
/// same t_j convention.
class StepSignal {
  public:
    StepSignal(std::vector<double> levels, std::vector<double> breakpoints);

    const std::vector<double>& levels() const { return levels_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    /// Number of segments K (>= 1); the signal has K-1 interior jumps.
    std::size_t segment_count() const { return levels_.size(); }

    /// Grid positions t_j = floor(n * tau_j) of the interior jumps,
    /// j = 1..K-1. The level changes between index t_j - 1 and t_j.
    std::vector<long> jump_indices(long n) const;

    /// Value at sample index i in 1..n.
    double value_at(long i, long n) const;

  private:
    std::vector<double> levels_;
    std::vector<double> breakpoints_;
};

/// Smooth mean component on [0,1]. The built-ins integrate to zero over
/// [0,1] (identifiability); a custom function is accepted as-is and that
/// constraint is the caller's responsibility.
class SmoothComponent {
  public:
    static SmoothComponent zero();
    static SmoothComponent f1();  // 1 - 2x
    static SmoothComponent f2();  // 4(x - 0.5)^2 - 1/3
    static SmoothComponent f3();  // sin(16 pi x)
    static SmoothComponent by_name(const std::string& name);
    static SmoothComponent custom(std::string name, std::function<double(double)> fn);

    double operator()(double x) const { return fn_(x); }
    const std::string& name() const { return name_; }

  private:
    SmoothComponent(std::string name, std::function<double(double)> fn);

    std::string name_;
    std::function<double(double)> fn_;
};

/// Difference scheme: weights d_0..d_l applied to observations spaced
/// `gap` apart, Delta(y_i) = sum_s d_s y_{i + s*gap}. With sum d_s = 0 the
/// scheme annihilates constants, which is required for estimation use.
class DifferenceScheme {
  public:
    DifferenceScheme(std::vector<double> weights, long gap);

    const std::vector<double>& weights() const { return weights_; }
    long gap() const { return gap_; }
    long order() const { return static_cast<long>(weights_.size()) - 1; }

    /// Normalizer p(d) = sum_s d_s^2.
    double normalizer() const { return normalizer_; }
    double weight_sum() const;
    bool annihilates_constants(double tol = 1e-12) const;

  private:
    std::vector<double> weights_;
    long gap_;
    double normalizer_;
};

/// mu_i = f(i/n) + g(i/n) for i = 1..n.
std::vector<double> evaluate_mean(const StepSignal& step, const SmoothComponent& smooth, long n);

/// Quadratic variation J_K = sum over interior jumps of (a_j - a_{j+1})^2.
double quadratic_variation(const StepSignal& step);

/// Total variation J_K^tv = sum over interior jumps of |a_j - a_{j+1}|.
double total_variation(const StepSignal& step);

/// Weighted jump functional H_{K,h} = sum_j (t_j - h/2) |a_{j-1} - a_j|
/// over the interior jumps, with t_j = floor(n * tau_j).
double weighted_jump_functional(const StepSignal& step, long n, long h);

/// Bias bookkeeping polynomial P_l(d) of a difference scheme:
///   P_l(d) = sum_{r=0}^{l-1} (r+1) (sum_{q<=r} d_q)^2
///          + 2 sum_{r=0}^{l-2} (r+1) (sum_{q<=r} d_q) sum_{s=r+1}^{l-1} sum_{p<=s} d_p.
/// For l = 1 this reduces to d_0^2.
double scheme_bias_polynomial(const DifferenceScheme& scheme);

/// True iff every adjacent breakpoint gap exceeds l(m+1)/n. A signal with
/// no jumps satisfies the condition vacuously.
bool check_jump_separation(const StepSignal& step, long n, long l, long m);

/// The six-change-point simulation signal: levels (0,10,0,1,0,1,0) with
/// breakpoints {1/6 -/+ 1/36, 3/6 -/+ 2/36, 5/6 -/+ 3/36}.
StepSignal six_jump_signal();

}  // namespace acovdiff
