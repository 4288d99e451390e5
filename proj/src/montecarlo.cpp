#include "acovdiff/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace acovdiff::mc {

EstimatorConfig EstimatorConfig::difference(long m, double d0, double d1) {
    EstimatorConfig c;
    c.kind = Kind::Difference;
    c.m = m;
    c.d0 = d0;
    c.d1 = d1;
    return c;
}

EstimatorConfig EstimatorConfig::hvk(long maxlag) {
    EstimatorConfig c;
    c.kind = Kind::Hvk;
    c.maxlag = maxlag;
    return c;
}

std::string EstimatorConfig::label() const {
    if (kind == Kind::Difference) {
        std::string s = "difference(m=" + std::to_string(m);
        if (d0 != 1.0 || d1 != -1.0) {
            s += ",d0=" + std::to_string(d0) + ",d1=" + std::to_string(d1);
        }
        return s + ")";
    }
    return "hvk";
}

const LagStats& MseReport::cell(const std::string& estimator, long lag) const {
    for (const auto& c : cells) {
        if (c.estimator == estimator && c.lag == lag) return c;
    }
    throw std::out_of_range("MseReport: no cell for " + estimator + " lag " +
                            std::to_string(lag));
}

const Gamma0Stats& MseReport::gamma0_of(const std::string& estimator) const {
    for (const auto& g : gamma0) {
        if (g.estimator == estimator) return g;
    }
    throw std::out_of_range("MseReport: no gamma0 stats for " + estimator);
}

namespace {

struct ReplicationResult {
    std::vector<double> rho;     // flattened (estimator, requested lag)
    std::vector<double> gamma0;  // per estimator
    bool ok = false;
};

// Lags actually produced per estimator: requested lags within the
// estimator's design range.
std::vector<std::vector<long>> usable_lags(const ExperimentSpec& spec) {
    std::vector<std::vector<long>> out(spec.estimators.size());
    for (std::size_t e = 0; e < spec.estimators.size(); ++e) {
        for (long lag : spec.lags) {
            if (lag >= 1 && lag <= spec.estimators[e].max_available_lag()) {
                out[e].push_back(lag);
            }
        }
    }
    return out;
}

}  // namespace

MseReport run_experiment(const ExperimentSpec& spec, int workers) {
    if (spec.replications < 1) {
        throw std::invalid_argument("run_experiment: at least one replication required");
    }
    if (spec.estimators.empty()) {
        throw std::invalid_argument("run_experiment: no estimators configured");
    }

    const auto mean = evaluate_mean(spec.signal, spec.smooth, spec.n);
    const auto lags_per_estimator = usable_lags(spec);
    std::size_t slots = 0;
    for (const auto& lags : lags_per_estimator) slots += lags.size();

    const long reps = spec.replications;
    std::vector<ReplicationResult> results(static_cast<std::size_t>(reps));

    auto run_one = [&](long r) {
        auto& slot = results[static_cast<std::size_t>(r)];
        slot.rho.assign(slots, 0.0);
        slot.gamma0.assign(spec.estimators.size(), 0.0);
        try {
            auto y = NoiseStream(spec.noise, spec.seed, static_cast<std::uint64_t>(r))
                         .generate(spec.n);
            for (std::size_t i = 0; i < y.size(); ++i) y[i] += mean[i];

            std::size_t cursor = 0;
            for (std::size_t e = 0; e < spec.estimators.size(); ++e) {
                const auto& cfg = spec.estimators[e];
                const AcfEstimate est =
                    cfg.kind == EstimatorConfig::Kind::Difference
                        ? estimate_acf(y, cfg.m, cfg.d0, cfg.d1)
                        : estimate_acf_hvk(y, cfg.maxlag);
                if (est.flagged) throw std::runtime_error("flagged estimate");
                slot.gamma0[e] = est.gamma[0];
                for (long lag : lags_per_estimator[e]) {
                    slot.rho[cursor++] = est.rho[static_cast<std::size_t>(lag)];
                }
            }
            slot.ok = true;
        } catch (const std::exception&) {
            slot.ok = false;  // excluded from aggregation, counted below
        }
    };

    int thread_count = workers > 0 ? workers
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (thread_count < 1) thread_count = 1;
    if (thread_count == 1) {
        for (long r = 0; r < reps; ++r) run_one(r);
    } else {
        std::atomic<long> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(thread_count));
        for (int t = 0; t < thread_count; ++t) {
            pool.emplace_back([&] {
                for (long r = next.fetch_add(1); r < reps; r = next.fetch_add(1)) run_one(r);
            });
        }
        for (auto& t : pool) t.join();
    }

    MseReport report;
    report.n = spec.n;
    report.replications = reps;
    report.seed = spec.seed;
    report.noise = spec.noise.describe();
    for (const auto& slot : results) {
        if (!slot.ok) ++report.failed;
    }
    if (100 * report.failed > reps) {
        throw ExperimentError("run_experiment: " + std::to_string(report.failed) + " of " +
                              std::to_string(reps) + " replications failed (>1%)");
    }
    const long used = reps - report.failed;

    long max_lag_needed = 0;
    for (long lag : spec.lags) max_lag_needed = std::max(max_lag_needed, lag);
    const auto truth = true_acf(spec.noise, max_lag_needed);

    // Ordered fold over replication index; independent of thread schedule.
    std::size_t cursor = 0;
    for (std::size_t e = 0; e < spec.estimators.size(); ++e) {
        const std::string label = spec.estimators[e].label();
        for (long lag : lags_per_estimator[e]) {
            const double target = truth[static_cast<std::size_t>(lag)] / truth[0];
            double sum_err = 0.0, sum_sq = 0.0, sum_quad = 0.0;
            for (const auto& slot : results) {
                if (!slot.ok) continue;
                const double err = slot.rho[cursor] - target;
                const double sq = err * err;
                sum_err += err;
                sum_sq += sq;
                sum_quad += sq * sq;
            }
            LagStats cell;
            cell.estimator = label;
            cell.lag = lag;
            cell.target = target;
            cell.used = used;
            const double du = static_cast<double>(used);
            cell.bias = sum_err / du;
            cell.mse = sum_sq / du;
            cell.variance = cell.mse - cell.bias * cell.bias;
            const double var_sq = used > 1 ? (sum_quad - sum_sq * sum_sq / du) / (du - 1.0) : 0.0;
            cell.mse_se = std::sqrt(std::max(0.0, var_sq) / du);
            report.cells.push_back(cell);
            ++cursor;
        }

        double sum = 0.0, sum_sq = 0.0;
        for (const auto& slot : results) {
            if (!slot.ok) continue;
            sum += slot.gamma0[e];
            sum_sq += slot.gamma0[e] * slot.gamma0[e];
        }
        Gamma0Stats g;
        g.estimator = label;
        g.used = used;
        const double du = static_cast<double>(used);
        g.mean = sum / du;
        g.variance = used > 1 ? (sum_sq - sum * sum / du) / (du - 1.0) : 0.0;
        g.se_mean = std::sqrt(std::max(0.0, g.variance) / du);
        report.gamma0.push_back(g);
    }
    return report;
}

double RateEntry::n_mse_ratio() const {
    double lo = 0.0, hi = 0.0;
    for (const auto& pt : points) {
        const double nm = static_cast<double>(pt.n) * pt.mse;
        if (lo == 0.0 || nm < lo) lo = nm;
        if (nm > hi) hi = nm;
    }
    return lo > 0.0 ? hi / lo : 0.0;
}

RateReport run_rate_study(const ExperimentSpec& base, const std::vector<long>& n_grid,
                          int workers) {
    if (n_grid.size() < 3) {
        throw std::invalid_argument("run_rate_study: need at least three sample sizes");
    }
    for (std::size_t i = 1; i < n_grid.size(); ++i) {
        if (n_grid[i] <= n_grid[i - 1]) {
            throw std::invalid_argument("run_rate_study: sample sizes must be increasing");
        }
    }

    std::vector<MseReport> reports;
    reports.reserve(n_grid.size());
    for (long n : n_grid) {
        ExperimentSpec spec = base;
        spec.n = n;
        reports.push_back(run_experiment(spec, workers));
    }

    RateReport out;
    for (const auto& cell : reports.front().cells) {
        RateEntry entry;
        entry.estimator = cell.estimator;
        entry.lag = cell.lag;
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (std::size_t i = 0; i < n_grid.size(); ++i) {
            const auto& c = reports[i].cell(cell.estimator, cell.lag);
            entry.points.push_back({n_grid[i], c.mse});
            const double x = std::log(static_cast<double>(n_grid[i]));
            const double y = std::log(c.mse);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double k = static_cast<double>(n_grid.size());
        entry.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
        out.entries.push_back(entry);
    }
    return out;
}

}  // namespace acovdiff::mc
