#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "acovdiff/estimators.hpp"
#include "acovdiff/noise.hpp"
#include "acovdiff/signal.hpp"

namespace acovdiff::mc {

/// One estimator to apply per replication.
struct EstimatorConfig {
    enum class Kind { Difference, Hvk };

    static EstimatorConfig difference(long m, double d0 = 1.0, double d1 = -1.0);
    static EstimatorConfig hvk(long maxlag);

    Kind kind = Kind::Difference;
    long m = 1;
    double d0 = 1.0;
    double d1 = -1.0;
    long maxlag = 1;

    long max_available_lag() const { return kind == Kind::Difference ? m : maxlag; }
    std::string label() const;
};

/// Full Monte Carlo scenario. Replication r draws its noise from stream
/// index r of the master seed, so results do not depend on how work is
/// scheduled across threads.
struct ExperimentSpec {
    StepSignal signal;
    SmoothComponent smooth;
    ErrorModel noise;
    long n = 0;
    long replications = 0;
    std::uint64_t seed = 0;
    std::vector<long> lags;
    std::vector<EstimatorConfig> estimators;
};

/// Aggregates for one (estimator, lag) cell. `target` is the true
/// autocorrelation of the error model at this lag; bias and variance come
/// from the same replication set, so mse = bias^2 + variance exactly (up
/// to rounding). `mse_se` is sd(squared errors)/sqrt(R).
struct LagStats {
    std::string estimator;
    long lag = 0;
    double target = 0.0;
    double mse = 0.0;
    double bias = 0.0;
    double variance = 0.0;
    double mse_se = 0.0;
    long used = 0;
};

/// Replication moments of the lag-0 autocovariance estimate, used to test
/// the bias/variance expansions.
struct Gamma0Stats {
    std::string estimator;
    double mean = 0.0;
    double variance = 0.0;
    double se_mean = 0.0;
    long used = 0;
};

struct MseReport {
    long n = 0;
    long replications = 0;
    std::uint64_t seed = 0;
    std::string noise;
    long failed = 0;
    std::vector<LagStats> cells;
    std::vector<Gamma0Stats> gamma0;

    const LagStats& cell(const std::string& estimator, long lag) const;
    const Gamma0Stats& gamma0_of(const std::string& estimator) const;
};

/// Raised when more than 1% of replications fail.
class ExperimentError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Runs the scenario. `workers` <= 0 means one thread per hardware core.
/// Reports are bit-identical for any worker count.
MseReport run_experiment(const ExperimentSpec& spec, int workers = 1);

/// Rate study over an increasing grid of sample sizes (length >= 3): runs
/// the scenario at each n and fits the least-squares slope of log MSE
/// against log n per (estimator, lag).
struct RatePoint {
    long n = 0;
    double mse = 0.0;
};
struct RateEntry {
    std::string estimator;
    long lag = 0;
    double slope = 0.0;
    std::vector<RatePoint> points;

    /// max over the grid of n*MSE divided by min of n*MSE.
    double n_mse_ratio() const;
};
struct RateReport {
    std::vector<RateEntry> entries;
};
RateReport run_rate_study(const ExperimentSpec& base, const std::vector<long>& n_grid,
                          int workers = 1);

}  // namespace acovdiff::mc
